#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resovar/rational.hpp"

namespace resovar {

// Exponent vector with trailing zeros trimmed, so equal monomials have equal
// representations. entry [i] is the exponent of x_{i+1}.
using Monomial = std::vector<std::uint32_t>;

// Lexicographic monomial order with x1 > x2 > ...; on trimmed vectors this is
// plain lexicographic comparison. Total, multiplicative, and 1 is minimal, so
// leading-term exact division terminates.
bool monomial_less(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& d, const Monomial& m);
Monomial monomial_quotient(const Monomial& m, const Monomial& d);

/*
 * Sparse multivariate polynomial over the rationals.
 *
 * Terms are kept sorted ascending in the monomial order with no zero
 * coefficients, so the representation is canonical: two polynomials are equal
 * iff their term vectors are equal. All arithmetic is exact.
 */
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(int value) : Polynomial(Rational(value)) {}  // NOLINT: Eigen needs Scalar(0)
  explicit Polynomial(const Rational& value);

  static Polynomial variable(Eigen::Index index);  // x_{index+1}
  static Polynomial term(const Rational& coeff, Monomial mono);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // A homogeneous degree-1 polynomial (or zero): no constant part.
  bool is_linear_form() const;

  // Smallest n such that the polynomial lives in Q[x1..xn].
  Eigen::Index num_variables() const;
  std::uint32_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree_in(Eigen::Index var) const;

  const std::vector<Term>& terms() const { return terms_; }
  Rational coeff(const Monomial& mono) const;
  // Coefficient of x_{var+1} in a linear form.
  Rational linear_coeff(Eigen::Index var) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial scaled(const Rational& c) const;

  // Exact division; throws std::logic_error if rhs does not divide exactly.
  Polynomial exact_div(const Polynomial& rhs) const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(const QVector& point) const;
  Polynomial substitute(Eigen::Index var, const Rational& value) const;

  // Deterministic rendering, leading term first: "x1^2*x2 - 1/2*x3 + 4".
  std::string to_string() const;

  // A rational point where a nonzero polynomial provably does not vanish,
  // found by fixing one variable at a time over 0..deg.
  static QVector nonvanishing_point(const Polynomial& p, Eigen::Index nvars);

 private:
  void normalize();  // sort, coalesce, drop zeros

  std::vector<Term> terms_;

  friend class PolynomialBuilder;
};

// Accumulates (monomial, coeff) pairs and normalizes once.
class PolynomialBuilder {
 public:
  void reserve(std::size_t n) { terms_.reserve(n); }
  void add(Monomial mono, Rational coeff) {
    terms_.emplace_back(std::move(mono), std::move(coeff));
  }
  Polynomial build();

 private:
  std::vector<Polynomial::Term> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  return a.exact_div(b);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Matrices of polynomials; for a matrix of linear forms in x1..xn the column
// count doubles as the variable count.
using LinFormMatrix = Eigen::Matrix<Polynomial, Eigen::Dynamic, Eigen::Dynamic>;
using PolyVector = Eigen::Matrix<Polynomial, Eigen::Dynamic, 1>;

// Every entry a linear form referencing only x1..x_cols.
bool is_linear_form_matrix(const LinFormMatrix& M);

// The column vector (x1, ..., xn)^T.
PolyVector variable_vector(Eigen::Index n);

}  // namespace resovar

namespace Eigen {

template <>
struct NumTraits<resovar::Polynomial> : GenericNumTraits<resovar::Polynomial> {
  typedef resovar::Polynomial Real;
  typedef resovar::Polynomial NonInteger;
  typedef resovar::Polynomial Nested;
  typedef resovar::Polynomial Literal;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 400,
    MulCost = 400
  };
};

}  // namespace Eigen

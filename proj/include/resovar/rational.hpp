#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>

namespace resovar {

// Exact arbitrary-precision scalars. mpq_class keeps every value in lowest
// terms with a positive denominator, so equality and sign tests are exact.
using Rational = mpq_class;
using Integer = mpz_class;

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using ZMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

// Exact integer quotient; the caller guarantees divisibility (fraction-free
// elimination produces only such quotients).
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// "p" or "p/q" with q != 0; the result is canonicalized (lowest terms,
// denominator > 0). Returns nullopt on any malformed input.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form back out: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& a);

}  // namespace resovar

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

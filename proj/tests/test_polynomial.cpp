#include <doctest.h>

#include <stdexcept>

#include "resovar/polynomial.hpp"
#include "resovar/prng.hpp"

using namespace resovar;

namespace {
const Polynomial x1 = Polynomial::variable(0);
const Polynomial x2 = Polynomial::variable(1);
const Polynomial x3 = Polynomial::variable(2);

Polynomial random_poly(SplitMix64& rng, int nvars, int max_deg, int nterms) {
  Polynomial p;
  for (int t = 0; t < nterms; ++t) {
    Monomial m(static_cast<std::size_t>(nvars), 0);
    for (auto& e : m) e = static_cast<std::uint32_t>(rng.uniform_int(0, max_deg));
    p += Polynomial::term(Rational(rng.uniform_int(-4, 4)), m);
  }
  return p;
}
}  // namespace

TEST_CASE("zero detection after cancellation") {
  CHECK((x1 * x2 - x2 * x1).is_zero());  // ring commutativity
  CHECK(Polynomial().is_zero());
  CHECK_FALSE((x1 * x1 + x2 * x2).is_zero());
}

TEST_CASE("canonical form makes equality decidable") {
  Polynomial lhs = (x1 + x2) * (x1 + x2);
  Polynomial rhs = x1 * x1 + x1 * x2 + x1 * x2 + x2 * x2;
  CHECK(lhs == rhs);
  CHECK(lhs - rhs == Polynomial());
  // Zero coefficients never survive.
  Polynomial cancel = (x1 + x2) * (x1 - x2);
  CHECK(cancel == x1 * x1 - x2 * x2);
  CHECK(cancel.terms().size() == 2);
}

TEST_CASE("degrees and variable counts") {
  Polynomial p = x1 * x1 * x3 + x2;
  CHECK(p.num_variables() == 3);
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.degree_in(5) == 0);
  CHECK(Polynomial().total_degree() == 0);
  CHECK(Polynomial(7).num_variables() == 0);
}

TEST_CASE("linear forms") {
  CHECK((x1 - x3).is_linear_form());
  CHECK(Polynomial().is_linear_form());
  CHECK_FALSE((x1 * x2).is_linear_form());
  CHECK_FALSE((x1 + Polynomial(1)).is_linear_form());
  CHECK((x1.scaled(Rational(3, 2)) - x2).linear_coeff(0) == Rational(3, 2));
  CHECK((x1 - x2).linear_coeff(1) == Rational(-1));
  CHECK((x1 - x2).linear_coeff(2) == Rational(0));
}

TEST_CASE("exact division") {
  Polynomial product = (x1 + x2) * (x1 - x2);
  CHECK(product.exact_div(x1 + x2) == x1 - x2);
  CHECK(product.exact_div(x1 - x2) == x1 + x2);
  CHECK_THROWS_AS((x1 * x1 + x2).exact_div(x1), std::logic_error);
  CHECK_THROWS_AS(x1.exact_div(Polynomial()), std::logic_error);
  CHECK(Polynomial().exact_div(x1 + x2) == Polynomial());
}

TEST_CASE("evaluation and substitution") {
  Polynomial p = x1 * x1 + x2.scaled(Rational(2));
  QVector point(2);
  point << Rational(3), Rational(1, 2);
  CHECK(p.evaluate(point) == Rational(10));

  Polynomial q = x1 * x2 + x3;
  Polynomial q2 = q.substitute(1, Rational(2));
  CHECK(q2 == x1.scaled(Rational(2)) + x3);
  CHECK(q.substitute(2, Rational(0)) == x1 * x2);
}

TEST_CASE("string rendering is deterministic, leading term first") {
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial(-3).to_string() == "-3");
  CHECK((x1 * x1).to_string() == "x1^2");
  CHECK((x1 * x2 - x3.scaled(Rational(1, 2))).to_string() == "x1*x2 - 1/2*x3");
  CHECK((-x2 + x1).to_string() == "x1 - x2");
  CHECK((x2 * x2 + x1.scaled(Rational(2)) + Polynomial(5)).to_string() == "2*x1 + x2^2 + 5");
}

TEST_CASE("nonvanishing point search certifies a nonzero value") {
  // Vanishes at x1 in {0,1,2}; the search must step past all of them.
  Polynomial p = x1 * (x1 - Polynomial(1)) * (x1 - Polynomial(2));
  QVector pt = Polynomial::nonvanishing_point(p, 1);
  CHECK(p.evaluate(pt) != Rational(0));

  SplitMix64 rng(0xabcdef12345ULL);
  for (int i = 0; i < 50; ++i) {
    Polynomial q = random_poly(rng, 3, 3, 4);
    if (q.is_zero()) continue;
    QVector qt = Polynomial::nonvanishing_point(q, 3);
    CHECK(q.evaluate(qt) != Rational(0));
  }
  CHECK_THROWS_AS(Polynomial::nonvanishing_point(Polynomial(), 2), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  SplitMix64 rng(0x5eed0001ULL);
  for (int i = 0; i < 40; ++i) {
    Polynomial a = random_poly(rng, 3, 3, 3);
    Polynomial b = random_poly(rng, 3, 3, 3);
    Polynomial c = random_poly(rng, 3, 3, 3);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + (-a) == Polynomial());
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
  }
}

TEST_CASE("variable vector and Eigen interop") {
  PolyVector x = variable_vector(3);
  CHECK(x(0) == x1);
  CHECK(x(2) == x3);
  LinFormMatrix M = LinFormMatrix::Constant(2, 3, Polynomial());
  M(0, 0) = x1;
  M(0, 2) = -x2;
  M(1, 1) = x3 + x1;
  PolyVector prod = M * x;
  CHECK(prod(0) == x1 * x1 - x2 * x3);
  CHECK(prod(1) == (x3 + x1) * x2);
  CHECK(is_linear_form_matrix(M));
  M(1, 0) = x1 * x1;
  CHECK_FALSE(is_linear_form_matrix(M));
}

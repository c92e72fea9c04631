#include "resovar/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace resovar {

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

std::uint32_t mono_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

}  // namespace

bool monomial_less(const Monomial& a, const Monomial& b) {
  // Trimmed vectors: std::lexicographical_compare agrees with comparison
  // under implicit zero-padding.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  const Monomial& lo = a.size() <= b.size() ? a : b;
  const Monomial& hi = a.size() <= b.size() ? b : a;
  Monomial out = hi;
  for (std::size_t i = 0; i < lo.size(); ++i) out[i] += lo[i];
  return out;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
  if (d.size() > m.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
  Monomial out = m;
  for (std::size_t i = 0; i < d.size(); ++i) out[i] -= d[i];
  trim(out);
  return out;
}

Polynomial::Polynomial(const Rational& value) {
  if (!resovar::is_zero(value)) terms_.emplace_back(Monomial{}, value);
}

Polynomial Polynomial::variable(Eigen::Index index) {
  if (index < 0) throw std::invalid_argument("Polynomial::variable: negative index");
  Monomial m(static_cast<std::size_t>(index) + 1, 0);
  m.back() = 1;
  Polynomial p;
  p.terms_.emplace_back(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Rational& coeff, Monomial mono) {
  Polynomial p;
  if (!resovar::is_zero(coeff)) {
    trim(mono);
    p.terms_.emplace_back(std::move(mono), coeff);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
}

bool Polynomial::is_linear_form() const {
  for (const auto& [mono, coeff] : terms_)
    if (mono_degree(mono) != 1) return false;
  return true;
}

Eigen::Index Polynomial::num_variables() const {
  std::size_t n = 0;
  for (const auto& [mono, coeff] : terms_) n = std::max(n, mono.size());
  return static_cast<Eigen::Index>(n);
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [mono, coeff] : terms_) d = std::max(d, mono_degree(mono));
  return d;
}

std::uint32_t Polynomial::degree_in(Eigen::Index var) const {
  std::uint32_t d = 0;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [mono, coeff] : terms_)
    if (v < mono.size()) d = std::max(d, mono[v]);
  return d;
}

Rational Polynomial::coeff(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) {
                               return monomial_less(t.first, m);
                             });
  if (it != terms_.end() && it->first == mono) return it->second;
  return Rational(0);
}

Rational Polynomial::linear_coeff(Eigen::Index var) const {
  Monomial m(static_cast<std::size_t>(var) + 1, 0);
  m.back() = 1;
  return coeff(m);
}

void Polynomial::normalize() {
  for (auto& [mono, coeff] : terms_) trim(mono);
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return monomial_less(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (resovar::is_zero(out.back().second)) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Polynomial PolynomialBuilder::build() {
  Polynomial p;
  p.terms_ = std::move(terms_);
  p.normalize();
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    const Monomial& a = terms_[i].first;
    const Monomial& b = rhs.terms_[j].first;
    if (a == b) {
      Rational c = terms_[i].second + rhs.terms_[j].second;
      if (!resovar::is_zero(c)) out.emplace_back(a, std::move(c));
      ++i, ++j;
    } else if (monomial_less(a, b)) {
      out.push_back(std::move(terms_[i++]));
    } else {
      out.push_back(rhs.terms_[j++]);
    }
  }
  while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
  while (j < rhs.terms_.size()) out.push_back(rhs.terms_[j++]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial();
  PolynomialBuilder builder;
  builder.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      builder.add(monomial_mul(ma, mb), ca * cb);
  return builder.build();
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (resovar::is_zero(c)) return Polynomial();
  Polynomial out = *this;
  for (auto& [mono, coeff] : out.terms_) coeff *= c;
  return out;
}

Polynomial Polynomial::exact_div(const Polynomial& rhs) const {
  if (rhs.is_zero()) throw std::logic_error("Polynomial::exact_div: division by zero");
  Polynomial remainder = *this;
  Polynomial quotient;
  const Term& dlead = rhs.terms_.back();
  while (!remainder.is_zero()) {
    const Term& rlead = remainder.terms_.back();
    if (!monomial_divides(dlead.first, rlead.first))
      throw std::logic_error("Polynomial::exact_div: not exactly divisible");
    Polynomial t = Polynomial::term(rlead.second / dlead.second,
                                    monomial_quotient(rlead.first, dlead.first));
    quotient += t;
    remainder -= t * rhs;
  }
  return quotient;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum(0);
  for (const auto& [mono, coeff] : terms_) {
    if (mono.size() > point.size())
      throw std::invalid_argument("Polynomial::evaluate: point has too few coordinates");
    Rational prod = coeff;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      for (std::uint32_t e = 0; e < mono[v]; ++e) prod *= point[v];
    }
    sum += prod;
  }
  return sum;
}

Rational Polynomial::evaluate(const QVector& point) const {
  return evaluate(std::span<const Rational>(point.data(), static_cast<std::size_t>(point.size())));
}

Polynomial Polynomial::substitute(Eigen::Index var, const Rational& value) const {
  const auto v = static_cast<std::size_t>(var);
  PolynomialBuilder builder;
  builder.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) {
    if (v >= mono.size() || mono[v] == 0) {
      builder.add(mono, coeff);
      continue;
    }
    Rational c = coeff;
    for (std::uint32_t e = 0; e < mono[v]; ++e) c *= value;
    if (resovar::is_zero(c)) continue;
    Monomial m = mono;
    m[v] = 0;
    builder.add(std::move(m), std::move(c));
  }
  return builder.build();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    const bool negative = sgn(coeff) < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (mono.empty()) {
      os << format_rational(mag);
    } else {
      bool printed = false;
      if (mag != 1) {
        os << format_rational(mag);
        printed = true;
      }
      for (std::size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        if (printed) os << "*";
        os << "x" << (v + 1);
        if (mono[v] > 1) os << "^" << mono[v];
        printed = true;
      }
    }
  }
  return os.str();
}

QVector Polynomial::nonvanishing_point(const Polynomial& p, Eigen::Index nvars) {
  if (p.is_zero())
    throw std::invalid_argument("nonvanishing_point: the zero polynomial vanishes everywhere");
  QVector point = QVector::Zero(nvars);
  Polynomial rest = p;
  for (Eigen::Index v = 0; v < nvars; ++v) {
    const std::uint32_t deg = rest.degree_in(v);
    // Some value in 0..deg keeps the restriction nonzero: a nonzero
    // polynomial of degree d in x_v cannot vanish at d+1 distinct values.
    for (std::uint32_t candidate = 0; candidate <= deg; ++candidate) {
      Polynomial restricted = rest.substitute(v, Rational(candidate));
      if (!restricted.is_zero()) {
        point(v) = Rational(candidate);
        rest = std::move(restricted);
        break;
      }
    }
  }
  return point;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

bool is_linear_form_matrix(const LinFormMatrix& M) {
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      const Polynomial& e = M(i, j);
      if (!e.is_linear_form() || e.num_variables() > M.cols()) return false;
    }
  return true;
}

PolyVector variable_vector(Eigen::Index n) {
  PolyVector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = Polynomial::variable(i);
  return x;
}

}  // namespace resovar

#include "resovar/resonance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "resovar/prng.hpp"

namespace resovar {

LinFormMatrix build_delta(const CupData& c) {
  LinFormMatrix delta = LinFormMatrix::Constant(c.m(), c.n(), Polynomial());
  for (int k = 1; k <= c.m(); ++k) {
    for (int j = 1; j <= c.n(); ++j) {
      PolynomialBuilder entry;
      for (int i = 1; i <= c.n(); ++i) {
        Rational mu = c(i, j, k);
        if (is_zero(mu)) continue;
        Monomial mono(static_cast<std::size_t>(i), 0);
        mono.back() = 1;
        entry.add(std::move(mono), std::move(mu));
      }
      delta(k - 1, j - 1) = entry.build();
    }
  }
  return delta;
}

namespace {

void check_depth(const CupData& c, Eigen::Index d) {
  if (d < 1 || d > c.n() - 1)
    throw std::invalid_argument("resonance depth d = " + std::to_string(d) +
                                " out of range 1.." + std::to_string(c.n() - 1) +
                                " (need 1 <= d <= n-1)");
}

}  // namespace

ResonanceReport resonance_ideal(const CupData& c, Eigen::Index d) {
  check_depth(c, d);
  ResonanceReport report;
  report.d = d;
  report.ideal = minors(build_delta(c), c.n() - d);
  report.full_space = !report.ideal.unit && report.ideal.all_zero();
  if (!report.full_space && !report.ideal.unit) {
    for (const auto& g : report.ideal.generators) {
      if (!g.is_zero()) {
        report.witness = g;
        break;
      }
    }
  }
  return report;
}

bool membership(const CupData& c, Eigen::Index d, const QVector& x) {
  check_depth(c, d);
  if (x.size() != c.n())
    throw std::invalid_argument("membership: point length " + std::to_string(x.size()) +
                                " does not match n = " + std::to_string(c.n()));
  return matrix_rank(evaluate(build_delta(c), x)) <= c.n() - d - 1;
}

R1Properness r1_properness(const CupData& c) {
  const Eigen::Index n = c.n();
  R1Properness out;
  const Eigen::Index s = n - 1;  // minor size for E_1
  if (s <= 0) {
    // No depth-1 jump is possible in a line: the empty minor 1 never vanishes.
    out.proper = true;
    out.witness = Polynomial(1);
    out.point = QVector::Zero(n);
    return out;
  }
  LinFormMatrix delta = build_delta(c);
  if (s > std::min(delta.rows(), delta.cols())) return out;  // zero ideal: R_1 = H^1

  // Sampling phase. Coordinates are drawn from [-10(n-1)T, 10(n-1)T] with
  // T = 16 trials; a hit is only ever used to pick the minor that gets
  // certified symbolically below.
  constexpr int kTrials = 16;
  const long bound = 10L * static_cast<long>(n - 1) * kTrials;
  SplitMix64 rng(0x5ca1ab1e0ddfadedULL);
  for (int trial = 0; trial < kTrials; ++trial) {
    QVector point(n);
    for (Eigen::Index i = 0; i < n; ++i) point(i) = Rational(rng.uniform_int(-bound, bound));
    QMatrix at_point = evaluate(delta, point);
    // Pivot rows/columns of an elimination give a nonsingular submatrix.
    PivotSelection pivots = pivot_submatrix(at_point);
    if (static_cast<Eigen::Index>(pivots.rows.size()) < s) continue;
    pivots.rows.resize(static_cast<std::size_t>(s));
    pivots.cols.resize(static_cast<std::size_t>(s));
    std::sort(pivots.rows.begin(), pivots.rows.end());
    Polynomial witness = minor_det(delta, pivots.rows, pivots.cols);
    if (witness.is_zero())
      throw std::logic_error("r1_properness: sampled minor expanded to zero");
    out.proper = true;
    out.witness = witness;
    out.point = Polynomial::nonvanishing_point(witness, n);
    return out;
  }

  // Exhaustive symbolic sweep; stops at the first nonzero minor.
  for_each_minor(delta, s,
                 [&out](const auto&, const auto&, const Polynomial& det) {
                   if (det.is_zero()) return true;
                   out.proper = true;
                   out.witness = det;
                   return false;
                 });
  if (out.proper) out.point = Polynomial::nonvanishing_point(*out.witness, n);
  return out;
}

bool r1_is_full(const CupData& c) { return !r1_properness(c).proper; }

}  // namespace resovar

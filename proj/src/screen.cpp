#include "resovar/screen.hpp"

#include <optional>
#include <stdexcept>

namespace resovar {

std::string reason_tag(Reason r) {
  switch (r) {
    case Reason::HodgeParity: return "hodge-parity";
    case Reason::Thm41: return "thm-4.1";
    case Reason::Prop511: return "prop-5.1-1";
    case Reason::Prop512: return "prop-5.1-2";
  }
  return "unknown";
}

std::string Verdict::summary() const {
  if (!excluded()) return "not-excluded";
  return "excluded(" + primary_reason_tag() + ")";
}

namespace {

void require_positive_b1(Eigen::Index n) {
  if (n >= 1) return;
  throw std::invalid_argument(
      "screen requires b1 >= 1: with b1 = 0 the parity and resonance/isotropy "
      "obstructions are vacuous, and the remaining finite-group / property-(T) "
      "arguments are not computable from cup-product data");
}

Finding parity_finding(Eigen::Index n) {
  return {Reason::HodgeParity,
          "b1 = " + std::to_string(n) + " is odd; Kahler groups have even b1"};
}

Finding thm41_finding(Eigen::Index image_dim) {
  return {Reason::Thm41,
          "R1 = H1 (full) but the cup-product image has dimension " +
              std::to_string(image_dim) + ", not 1"};
}

}  // namespace

Verdict kahler_screen(const CupData& c) {
  require_positive_b1(c.n());
  Verdict v;
  v.subject = SubjectKind::CupDataSubject;
  const Eigen::Index image_dim = cup_image_dim(c, Subspace::whole(c.n()));
  std::optional<bool> r1_full_cache;
  auto r1_full = [&c, &r1_full_cache] {
    if (!r1_full_cache) r1_full_cache = r1_is_full(c);
    return *r1_full_cache;
  };
  if (c.n() % 2 != 0) {
    v.kahler_possible = KahlerPossible::Excluded;
    v.reasons.push_back(parity_finding(c.n()));
  } else if (r1_full() && image_dim != 1) {
    v.kahler_possible = KahlerPossible::Excluded;
    v.reasons.push_back(thm41_finding(image_dim));
  } else {
    v.kahler_possible = KahlerPossible::NotExcluded;
  }
  // Necessary conditions for c to be the cup structure of a closed oriented
  // 3-manifold: b2 = b1, skew Delta, image dimension != 1, and full R_1 when
  // b1 is even.
  v.threemanifold_consistent = c.m() == c.n() && !skew_violation(build_delta(c)) &&
                               image_dim != 1 && (c.n() % 2 != 0 || r1_full());
  return v;
}

Verdict threemanifold_kahler_screen(const ThreeForm& t) {
  require_positive_b1(t.n());
  const ThreeManifoldReport report = threemanifold_check(t);
  Verdict v;
  v.subject = SubjectKind::ThreeFormSubject;
  v.threemanifold_consistent = report.valid();
  if (report.b1_parity == Parity::Odd) {
    v.kahler_possible = KahlerPossible::Excluded;
    v.reasons.push_back(parity_finding(report.b1));
    return v;
  }
  // Even b1 on valid 3-manifold data: R_1 is full and the image dimension is
  // never 1, so the resonance/isotropy obstruction always fires.
  if (report.r1_full && report.cup_image_dim != 1) {
    v.kahler_possible = KahlerPossible::Excluded;
    v.reasons.push_back(thm41_finding(report.cup_image_dim));
    v.reasons.push_back({Reason::Prop512,
                         "b1 = " + std::to_string(report.b1) +
                             " even forces R1 = H1 on closed orientable 3-manifold data"});
    v.reasons.push_back({Reason::Prop511,
                         "the cup-product image dimension (" +
                             std::to_string(report.cup_image_dim) +
                             ") is never 1 on closed orientable 3-manifold data"});
  } else {
    // Unreachable for genuine 3-manifold data; reachable only if the input
    // violates the 3-manifold constraints, which report.valid() records.
    v.kahler_possible = KahlerPossible::NotExcluded;
  }
  return v;
}

}  // namespace resovar

#pragma once

#include <string>
#include <vector>

#include "resovar/threeform.hpp"

namespace resovar {

// Why a verdict fired. The tags are stable output tokens.
enum class Reason { HodgeParity, Thm41, Prop511, Prop512 };

std::string reason_tag(Reason r);  // "hodge-parity" | "thm-4.1" | "prop-5.1-1" | "prop-5.1-2"

struct Finding {
  Reason reason;
  std::string detail;  // deterministic human-readable explanation
};

enum class SubjectKind { CupDataSubject, ThreeFormSubject };
enum class KahlerPossible { Excluded, NotExcluded };

/*
 * Outcome of the obstruction screens. "excluded" means the data cannot come
 * from a compact Kahler manifold; "not-excluded" is a failure to obstruct,
 * never a certificate of Kahlerness. threemanifold_consistent records
 * whether the data passes the necessary conditions for being the cup
 * structure of a closed oriented 3-manifold; it is always true for data
 * derived from a ThreeForm.
 */
struct Verdict {
  SubjectKind subject = SubjectKind::CupDataSubject;
  KahlerPossible kahler_possible = KahlerPossible::NotExcluded;
  bool threemanifold_consistent = false;
  std::vector<Finding> reasons;  // nonempty whenever the verdict is "excluded"

  bool excluded() const { return kahler_possible == KahlerPossible::Excluded; }
  std::string primary_reason_tag() const {
    return reasons.empty() ? std::string() : reason_tag(reasons.front().reason);
  }
  // "excluded(hodge-parity)", "excluded(thm-4.1)" or "not-excluded".
  std::string summary() const;
};

/*
 * Necessary-condition filter for Kahler groups with b1 >= 1:
 *   - odd b1 is excluded (Hodge parity);
 *   - R_1 = H^1 with cup image dimension != 1 is excluded (a full first
 *     resonance variety forces a 1-dimensional cup image on Kahler data).
 * Parity is checked first so verdicts are deterministic when both apply.
 * Rejects n = 0: with b1 = 0 the screen's obstructions are vacuous and the
 * finite/property-(T) arguments are outside cup-product data.
 */
Verdict kahler_screen(const CupData& c);

// Same screen on 3-manifold data: runs threemanifold_check first and reuses
// its findings. For every valid 3-form the verdict is excluded, via
// hodge-parity when b1 is odd and via thm-4.1 when b1 is even.
Verdict threemanifold_kahler_screen(const ThreeForm& t);

}  // namespace resovar

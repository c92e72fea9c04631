#pragma once

#include <optional>

#include "resovar/cup.hpp"
#include "resovar/determinantal.hpp"
#include "resovar/linalg.hpp"

namespace resovar {

// The m x n matrix of linear forms with entry (k, j) = sum_i mu(i,j,k) x_i.
// Row index k runs over the H^2 basis, column index j over the H^1 basis.
LinFormMatrix build_delta(const CupData& c);

// First resonance data for depth d: R_d is the vanishing locus of the ideal
// of (n-d) x (n-d) minors of Delta.
struct ResonanceReport {
  Eigen::Index d = 1;
  IdealGens ideal;
  bool full_space = false;                // every generator vanishes identically
  std::optional<Polynomial> witness;      // first nonzero generator, when proper
};

// Requires 1 <= d <= n-1. full_space is decided by symbolic zero-testing of
// every generator, never by sampling.
ResonanceReport resonance_ideal(const CupData& c, Eigen::Index d);

// x in R_d, decided by exact rank: rank Delta(x) <= n-d-1.
bool membership(const CupData& c, Eigen::Index d, const QVector& x);

struct R1Properness {
  bool proper = false;                    // some (n-1) x (n-1) minor is nonzero
  std::optional<Polynomial> witness;      // that minor, expanded symbolically
  std::optional<QVector> point;           // a point where the witness is nonzero
};

/*
 * Is R_1 a proper subvariety of H^1? Fast path: Schwartz-Zippel sampling
 * looks for a point where Delta has rank >= n-1; a hit selects a concrete
 * (n-1)-minor which is then expanded and certified symbolically. If sampling
 * finds nothing the minors are expanded exhaustively. Every answer is
 * certified symbolically either way; sampling only picks the candidate.
 */
R1Properness r1_properness(const CupData& c);

inline bool r1_is_proper(const CupData& c) { return r1_properness(c).proper; }

// R_1 = H^1. Complement of r1_properness; for n >= 2 this equals
// resonance_ideal(c, 1).full_space (a tested invariant).
bool r1_is_full(const CupData& c);

}  // namespace resovar

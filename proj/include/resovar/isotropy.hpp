#pragma once

#include "resovar/cup.hpp"
#include "resovar/linalg.hpp"

namespace resovar {

// A subspace of H^1, stored as a reduced row-echelon basis so that equal
// subspaces have identical representations.
class Subspace {
 public:
  // The zero subspace of an n-dimensional ambient space.
  explicit Subspace(Eigen::Index ambient);
  // Span of the rows; the basis is canonicalized on construction.
  Subspace(Eigen::Index ambient, const QMatrix& spanning_rows);

  static Subspace whole(Eigen::Index ambient);
  static Subspace span_of(const QVector& v);

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  QVector basis_vector(Eigen::Index i) const { return basis_.row(i).transpose(); }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Eigen::Index ambient_;
  QMatrix basis_;  // dim x ambient, RREF
};

// dim span{ u cup v : u, v in E }: the rank of the matrix whose rows are the
// cup products of basis pairs (only i < j contribute, by antisymmetry).
Eigen::Index cup_image_dim(const CupData& c, const Subspace& E);

// Non-zero subspace on which the cup product restricts to zero. The zero
// subspace is not isotropic by convention.
bool is_isotropic(const CupData& c, const Subspace& E);

// The restriction of the cup product to E has exactly 1-dimensional image.
bool is_one_isotropic(const CupData& c, const Subspace& E);

/*
 * Greedy isotropic extension over Q. Requires E isotropic or zero. Repeatedly
 * adjoins the echelon-least new vector y with y cup e = 0 for every basis
 * vector e of E (span(E, y) is then isotropic: y cup y = 0 always), until no
 * rational vector outside E cups to zero with all of E. The result is maximal
 * among rational isotropic subspaces containing E and is a fixed point of
 * this operation.
 */
Subspace extend_isotropic(const CupData& c, const Subspace& E);

}  // namespace resovar

#include "resovar/isotropy.hpp"

#include <stdexcept>
#include <string>

#include "resovar/resonance.hpp"

namespace resovar {

Subspace::Subspace(Eigen::Index ambient) : ambient_(ambient), basis_(0, ambient) {
  if (ambient < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
}

Subspace::Subspace(Eigen::Index ambient, const QMatrix& spanning_rows) : ambient_(ambient) {
  if (spanning_rows.cols() != ambient)
    throw std::invalid_argument("Subspace: spanning rows have wrong width");
  basis_ = row_reduce(spanning_rows).rref;
}

Subspace Subspace::whole(Eigen::Index ambient) {
  return Subspace(ambient, QMatrix::Identity(ambient, ambient));
}

Subspace Subspace::span_of(const QVector& v) {
  return Subspace(v.size(), v.transpose());
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector has wrong length");
  // Reduce v against the echelon basis; membership iff the residue vanishes.
  QVector r = v;
  for (Eigen::Index row = 0; row < basis_.rows(); ++row) {
    Eigen::Index lead = 0;
    while (lead < ambient_ && is_zero(basis_(row, lead))) ++lead;
    if (lead == ambient_) continue;
    if (!is_zero(r(lead))) {
      const Rational factor = r(lead) / basis_(row, lead);
      for (Eigen::Index j = lead; j < ambient_; ++j) r(j) -= factor * basis_(row, j);
    }
  }
  for (Eigen::Index j = 0; j < ambient_; ++j)
    if (!is_zero(r(j))) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (Eigen::Index i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Eigen::Index cup_image_dim(const CupData& c, const Subspace& E) {
  if (E.ambient() != c.n())
    throw std::invalid_argument("cup_image_dim: subspace ambient " + std::to_string(E.ambient()) +
                                " does not match n = " + std::to_string(c.n()));
  const Eigen::Index dim = E.dim();
  const Eigen::Index pairs = dim * (dim - 1) / 2;
  QMatrix products(pairs, c.m());
  Eigen::Index row = 0;
  for (Eigen::Index p = 0; p < dim; ++p) {
    for (Eigen::Index q = p + 1; q < dim; ++q) {
      products.row(row++) = cup_product(c, E.basis_vector(p), E.basis_vector(q)).transpose();
    }
  }
  return matrix_rank(products);
}

bool is_isotropic(const CupData& c, const Subspace& E) {
  return E.dim() >= 1 && cup_image_dim(c, E) == 0;
}

bool is_one_isotropic(const CupData& c, const Subspace& E) {
  return cup_image_dim(c, E) == 1;
}

Subspace extend_isotropic(const CupData& c, const Subspace& E) {
  if (E.ambient() != c.n())
    throw std::invalid_argument("extend_isotropic: subspace ambient does not match n");
  if (E.dim() > 0 && !is_isotropic(c, E))
    throw std::invalid_argument("extend_isotropic: input subspace is not isotropic");

  const Eigen::Index n = c.n();
  LinFormMatrix delta = build_delta(c);
  Subspace current = E;
  while (true) {
    // y cup e = 0 for all basis e of current  <=>  Delta(e) y = 0 stacked.
    QMatrix constraints(current.dim() * c.m(), n);
    for (Eigen::Index b = 0; b < current.dim(); ++b)
      constraints.middleRows(b * c.m(), c.m()) = evaluate(delta, current.basis_vector(b));
    QMatrix solution = kernel_basis(constraints);
    if (solution.rows() == current.dim()) return current;  // solution space == current
    // Echelon-least new direction.
    Eigen::Index pick = -1;
    for (Eigen::Index i = 0; i < solution.rows(); ++i) {
      if (!current.contains(QVector(solution.row(i).transpose()))) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return current;  // same span presented differently
    QMatrix extended(current.dim() + 1, n);
    extended.topRows(current.dim()) = current.basis();
    extended.row(current.dim()) = solution.row(pick);
    current = Subspace(n, extended);
  }
}

}  // namespace resovar

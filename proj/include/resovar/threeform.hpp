#pragma once

#include <map>
#include <tuple>

#include "resovar/cup.hpp"
#include "resovar/isotropy.hpp"
#include "resovar/resonance.hpp"

namespace resovar {

/*
 * Alternating 3-form on H^1 of a closed oriented 3-manifold: the triple cup
 * product evaluated against the fundamental class. Only strictly increasing
 * triples are stored; permuted lookups carry the permutation sign and
 * repeated indices give zero. Indices are 1-based.
 */
class ThreeForm {
 public:
  using Key = std::tuple<int, int, int>;  // i < j < k

  explicit ThreeForm(Eigen::Index n) : n_(n) {
    if (n < 0) throw std::invalid_argument("ThreeForm: negative dimension");
  }

  Eigen::Index n() const { return n_; }

  // Requires 1 <= i < j < k <= n; a zero value clears the key.
  void set(int i, int j, int k, const Rational& value);
  // Any index order; antisymmetrized lookup.
  Rational operator()(int i, int j, int k) const;

  const std::map<Key, Rational>& values() const { return values_; }
  bool is_zero_form() const { return values_.empty(); }

  friend bool operator==(const ThreeForm& a, const ThreeForm& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  Eigen::Index n_ = 0;
  std::map<Key, Rational> values_;
};

// Cup-product data over the Kronecker duals of the Poincare duals of the
// e-basis: b2 = b1 and mu(i,j,k) is the form itself, so the Delta matrix of
// the result is skew-symmetric.
CupData cup_from_threeform(const ThreeForm& t);

// t'(i,j,k) = sum t(p,q,r) B(p,i) B(q,j) B(r,k) for invertible B.
ThreeForm change_basis(const ThreeForm& t, const QMatrix& B);

enum class Parity { Even, Odd };

// Conclusions forced on closed orientable 3-manifold data: the whole of H^1
// is never 1-isotropic, and even b1 forces R_1 = H^1. A violation means the
// input is not the 3-form of any closed oriented 3-manifold.
struct ThreeManifoldReport {
  Eigen::Index b1 = 0;
  Parity b1_parity = Parity::Even;
  Eigen::Index cup_image_dim = 0;
  bool r1_full = false;
  bool one_isotropic_violation = false;  // whole space 1-isotropic: must be false
  bool r1_violation = false;             // b1 even but R_1 proper: must be false

  bool valid() const { return !one_isotropic_violation && !r1_violation; }
};

ThreeManifoldReport threemanifold_check(const ThreeForm& t);

}  // namespace resovar

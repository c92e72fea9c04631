#pragma once

#include <map>
#include <tuple>

#include "resovar/linalg.hpp"
#include "resovar/polynomial.hpp"
#include "resovar/rational.hpp"

namespace resovar {

/*
 * Structure constants of the cup product H^1 x H^1 -> H^2 in fixed bases
 * e_1..e_n of H^1 and f_1..f_m of H^2:
 *
 *   e_i cup e_j = sum_k mu(i,j,k) f_k.
 *
 * Only keys with i < j are stored; i > j is derived by antisymmetry and
 * i == j is zero. Indices are 1-based to match the usual basis notation.
 */
class CupData {
 public:
  using Key = std::tuple<int, int, int>;  // (i, j, k), i < j

  CupData(Eigen::Index n, Eigen::Index m) : n_(n), m_(m) {
    if (n < 0 || m < 0) throw std::invalid_argument("CupData: negative dimension");
  }

  Eigen::Index n() const { return n_; }  // b1 = dim H^1
  Eigen::Index m() const { return m_; }  // b2 = dim H^2

  // Requires 1 <= i < j <= n, 1 <= k <= m; a zero value clears the key.
  void set(int i, int j, int k, const Rational& value);
  Rational operator()(int i, int j, int k) const;

  const std::map<Key, Rational>& constants() const { return constants_; }

  friend bool operator==(const CupData& a, const CupData& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.constants_ == b.constants_;
  }

 private:
  void check_key(int i, int j, int k) const;

  Eigen::Index n_ = 0;
  Eigen::Index m_ = 0;
  std::map<Key, Rational> constants_;
};

// Coefficient vector of u cup v in the f-basis.
QVector cup_product(const CupData& c, const QVector& u, const QVector& v);

// New H^1 basis e'_j = sum_i B(i,j) e_i; B must be invertible n x n.
CupData change_basis_h1(const CupData& c, const QMatrix& B);

// Apply an invertible m x m map to the H^2 coordinates:
// mu'(i,j,l) = sum_k A(l,k) mu(i,j,k).
CupData change_basis_h2(const CupData& c, const QMatrix& A);

}  // namespace resovar

#include "resovar/threeform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace resovar {

void ThreeForm::set(int i, int j, int k, const Rational& value) {
  if (!(1 <= i && i < j && j < k && k <= n_))
    throw std::invalid_argument("ThreeForm: key (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) +
                                ") must satisfy 1 <= i < j < k <= " + std::to_string(n_));
  if (is_zero(value))
    values_.erase(Key{i, j, k});
  else
    values_[Key{i, j, k}] = value;
}

Rational ThreeForm::operator()(int i, int j, int k) const {
  for (int idx : {i, j, k})
    if (idx < 1 || idx > n_)
      throw std::invalid_argument("ThreeForm: index " + std::to_string(idx) +
                                  " out of range 1.." + std::to_string(n_));
  if (i == j || j == k || i == k) return Rational(0);
  // Sort the triple, tracking the permutation sign.
  int a = i, b = j, c = k, sign = 1;
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  auto it = values_.find(Key{a, b, c});
  if (it == values_.end()) return Rational(0);
  return sign > 0 ? it->second : Rational(-it->second);
}

CupData cup_from_threeform(const ThreeForm& t) {
  const Eigen::Index n = t.n();
  CupData c(n, n);  // Poincare duality: b2 = b1
  for (const auto& [key, value] : t.values()) {
    const auto [i, j, k] = key;
    // mu(e_i, e_j, e_k) contributes to all three cyclic pair/dual splits.
    c.set(i, j, k, value);
    c.set(j, k, i, value);
    c.set(i, k, j, -value);
  }
  return c;
}

ThreeForm change_basis(const ThreeForm& t, const QMatrix& B) {
  const Eigen::Index n = t.n();
  if (B.rows() != n || B.cols() != n)
    throw std::invalid_argument("change_basis: matrix must be n x n");
  if (matrix_rank(B) != n) throw std::invalid_argument("change_basis: matrix is singular");
  ThreeForm out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        Rational sum(0);
        for (const auto& [key, value] : t.values()) {
          const auto [p, q, r] = key;
          // Sum over the six orderings of (p, q, r) with signs: expand the
          // 3 x 3 determinant of B rows (p,q,r), columns (i,j,k).
          sum += value * (B(p - 1, i - 1) * (B(q - 1, j - 1) * B(r - 1, k - 1) -
                                             B(q - 1, k - 1) * B(r - 1, j - 1)) -
                          B(p - 1, j - 1) * (B(q - 1, i - 1) * B(r - 1, k - 1) -
                                             B(q - 1, k - 1) * B(r - 1, i - 1)) +
                          B(p - 1, k - 1) * (B(q - 1, i - 1) * B(r - 1, j - 1) -
                                             B(q - 1, j - 1) * B(r - 1, i - 1)));
        }
        out.set(i, j, k, sum);
      }
    }
  }
  return out;
}

ThreeManifoldReport threemanifold_check(const ThreeForm& t) {
  ThreeManifoldReport report;
  report.b1 = t.n();
  report.b1_parity = t.n() % 2 == 0 ? Parity::Even : Parity::Odd;
  const CupData c = cup_from_threeform(t);
  report.cup_image_dim = cup_image_dim(c, Subspace::whole(t.n()));
  report.r1_full = r1_is_full(c);
  report.one_isotropic_violation = report.cup_image_dim == 1;
  report.r1_violation = report.b1_parity == Parity::Even && !report.r1_full;
  return report;
}

}  // namespace resovar

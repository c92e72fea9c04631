#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "resovar/polynomial.hpp"

namespace resovar {

// Generators of a determinantal ideal. unit = true marks the unit ideal
// (empty vanishing locus); its generator list is the single constant 1.
// An empty generator list with unit = false is the zero ideal, whose
// vanishing locus is the whole space.
struct IdealGens {
  std::vector<Polynomial> generators;
  bool unit = false;

  bool all_zero() const {
    for (const auto& g : generators)
      if (!g.is_zero()) return false;
    return true;
  }
};

namespace detail {

// Determinant by Laplace expansion shared over column subsets: dp[mask] is
// the determinant of rows 0..popcount(mask)-1 and the columns in mask.
// O(2^s) polynomials; meant for s <= 6.
template <typename Matrix>
typename Matrix::Scalar det_cofactor(const Matrix& M) {
  using Scalar = typename Matrix::Scalar;
  const int s = static_cast<int>(M.rows());
  if (s == 0) return Scalar(1);
  std::vector<Scalar> dp(std::size_t(1) << s, Scalar(0));
  dp[0] = Scalar(1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << s); ++mask) {
    const int row = __builtin_popcount(mask) - 1;
    Scalar acc(0);
    int idx = 0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1, ++idx) {
      const int col = __builtin_ctz(bits);
      const Scalar& entry = M(row, col);
      if (!is_zero(entry)) {
        Scalar contrib = entry * dp[mask & ~(std::uint32_t(1) << col)];
        if ((row + idx) % 2 == 0)
          acc += contrib;
        else
          acc -= contrib;
      }
    }
    dp[mask] = std::move(acc);
  }
  return dp[(std::uint32_t(1) << s) - 1];
}

// Fraction-free Bareiss determinant; every division is exact. First nonzero
// pivot per column, swaps tracked by sign.
template <typename Matrix>
typename Matrix::Scalar det_bareiss(const Matrix& input) {
  using Scalar = typename Matrix::Scalar;
  Matrix M = input;
  const Eigen::Index n = M.rows();
  Scalar prev_pivot = Scalar(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (!is_zero(M(i, k))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) return Scalar(0);
    if (pivot_row != k) {
      M.row(pivot_row).swap(M.row(k));
      sign = -sign;
    }
    const Scalar pivot = M(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        M(i, j) = exact_quotient(M(i, j) * pivot - M(i, k) * M(k, j), prev_pivot);
      M(i, k) = Scalar(0);
    }
    prev_pivot = pivot;
  }
  Scalar det = n == 0 ? Scalar(1) : M(n - 1, n - 1);
  if (sign < 0) det = Scalar(0) - det;
  return det;
}

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<Eigen::Index>> subsets_lex(Eigen::Index n, Eigen::Index k);

}  // namespace detail

// Exact symbolic determinant. Laplace-expansion sharing up to size 6,
// fraction-free elimination above; the crossover keeps expression growth in
// check at the target sizes (n <= 8).
Polynomial determinant(const LinFormMatrix& M);

// Determinant of a submatrix given by row/column index lists.
Polynomial minor_det(const LinFormMatrix& M, const std::vector<Eigen::Index>& rows,
                     const std::vector<Eigen::Index>& cols);

// All s x s minors in lexicographic order of (row set, column set).
// s <= 0 yields the unit ideal; s > min(rows, cols) yields the zero ideal.
// Forced by the rank reading: rank <= s-1 holds nowhere, resp. everywhere.
IdealGens minors(const LinFormMatrix& M, Eigen::Index s);

// Visit minors in the same order; return false from the callback to stop.
void for_each_minor(const LinFormMatrix& M, Eigen::Index s,
                    const std::function<bool(const std::vector<Eigen::Index>&,
                                             const std::vector<Eigen::Index>&,
                                             const Polynomial&)>& visit);

// Pfaffian of an even-size skew-symmetric matrix by expansion along the first
// row (memoized over index subsets). pfaffian(M)^2 = determinant(M).
// Throws std::invalid_argument for odd size or a non-skew entry, naming the
// violating entry.
Polynomial pfaffian(const LinFormMatrix& M);

// First entry (i, j), 1-based, with M(i,j) + M(j,i) != 0, if any.
std::optional<std::pair<Eigen::Index, Eigen::Index>> skew_violation(const LinFormMatrix& M);

}  // namespace resovar

#pragma once

#include "resovar/cup.hpp"
#include "resovar/linalg.hpp"
#include "resovar/prng.hpp"
#include "resovar/threeform.hpp"

namespace resovar::testutil {

inline CupData random_cup_data(SplitMix64& rng, int n, int m, long max_abs = 5) {
  CupData c(n, m);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= m; ++k) c.set(i, j, k, Rational(rng.uniform_int(-max_abs, max_abs)));
  return c;
}

inline ThreeForm random_threeform(SplitMix64& rng, int n, long max_abs = 5) {
  ThreeForm t(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) t.set(i, j, k, Rational(rng.uniform_int(-max_abs, max_abs)));
  return t;
}

inline QVector random_point(SplitMix64& rng, Eigen::Index n, long bound = 5) {
  QVector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = Rational(rng.uniform_int(-bound, bound));
  return x;
}

inline QMatrix random_matrix(SplitMix64& rng, Eigen::Index rows, Eigen::Index cols,
                             long max_abs = 5) {
  QMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = Rational(rng.uniform_int(-max_abs, max_abs));
  return M;
}

inline QMatrix random_invertible(SplitMix64& rng, Eigen::Index n, long max_abs = 3) {
  while (true) {
    QMatrix M = random_matrix(rng, n, n, max_abs);
    if (matrix_rank(M) == n) return M;
  }
}

// Random skew-symmetric matrix of linear forms in nvars variables.
inline LinFormMatrix random_skew_linform(SplitMix64& rng, Eigen::Index size, Eigen::Index nvars,
                                         long max_abs = 3) {
  LinFormMatrix M = LinFormMatrix::Constant(size, size, Polynomial());
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = i + 1; j < size; ++j) {
      Polynomial entry;
      for (Eigen::Index v = 0; v < nvars; ++v) {
        const long cv = rng.uniform_int(-max_abs, max_abs);
        if (cv != 0) entry += Polynomial::variable(v).scaled(Rational(cv));
      }
      M(i, j) = entry;
      M(j, i) = -M(i, j);
    }
  }
  return M;
}

inline bool matrices_equal(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool matrices_equal(const LinFormMatrix& a, const LinFormMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace resovar::testutil

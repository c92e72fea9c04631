#include "resovar/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace resovar {

Eigen::Index matrix_rank(const QMatrix& M) {
  ZMatrix Z(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Integer scale(1);
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), M(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      Rational v = M(i, j) * scale;
      Z(i, j) = v.get_num();  // denominator is 1 after scaling
    }
  }
  return bareiss_rank(Z);
}

RowReduction row_reduce(const QMatrix& M) {
  QMatrix R = M;
  const Eigen::Index rows = R.rows(), cols = R.cols();
  RowReduction out;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (!is_zero(R(i, col))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) R.row(pivot_row).swap(R.row(rank));
    const Rational pivot = R(rank, col);
    for (Eigen::Index j = col; j < cols; ++j) R(rank, j) /= pivot;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == rank || is_zero(R(i, col))) continue;
      const Rational factor = R(i, col);
      for (Eigen::Index j = col; j < cols; ++j) R(i, j) -= factor * R(rank, j);
    }
    out.pivot_cols.push_back(col);
    ++rank;
  }
  out.rank = rank;
  out.rref = R.topRows(rank);
  return out;
}

QMatrix kernel_basis(const QMatrix& M) {
  const Eigen::Index cols = M.cols();
  RowReduction red = row_reduce(M);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : red.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  const Eigen::Index dim = cols - red.rank;
  QMatrix basis = QMatrix::Zero(dim, cols);
  Eigen::Index row = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    basis(row, free_col) = 1;
    for (Eigen::Index r = 0; r < red.rank; ++r)
      basis(row, red.pivot_cols[static_cast<std::size_t>(r)]) = -red.rref(r, free_col);
    ++row;
  }
  return row_reduce(basis).rref;
}

PivotSelection pivot_submatrix(const QMatrix& M) {
  QMatrix R = M;
  const Eigen::Index rows = R.rows(), cols = R.cols();
  std::vector<Eigen::Index> origin(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) origin[static_cast<std::size_t>(i)] = i;
  PivotSelection out;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (!is_zero(R(i, col))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) {
      R.row(pivot_row).swap(R.row(rank));
      std::swap(origin[static_cast<std::size_t>(pivot_row)], origin[static_cast<std::size_t>(rank)]);
    }
    const Rational pivot = R(rank, col);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      if (is_zero(R(i, col))) continue;
      const Rational factor = R(i, col) / pivot;
      for (Eigen::Index j = col; j < cols; ++j) R(i, j) -= factor * R(rank, j);
    }
    out.rows.push_back(origin[static_cast<std::size_t>(rank)]);
    out.cols.push_back(col);
    ++rank;
  }
  return out;
}

QMatrix evaluate(const LinFormMatrix& M, const QVector& point) {
  if (point.size() != M.cols())
    throw std::invalid_argument("evaluate: point length " + std::to_string(point.size()) +
                                " does not match variable count " + std::to_string(M.cols()));
  QMatrix out(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) out(i, j) = M(i, j).evaluate(point);
  return out;
}

}  // namespace resovar

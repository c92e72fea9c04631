#pragma once

#include <vector>

#include "resovar/polynomial.hpp"
#include "resovar/rational.hpp"

namespace resovar {

/*
 * Fraction-free (Bareiss) elimination over an exact scalar with
 * exact_quotient(). Pivots are the first nonzero entry in each column, so the
 * result is deterministic; over exact arithmetic any nonzero pivot is valid.
 * Returns the rank; pivot_cols, if given, receives the pivot columns in order.
 */
template <typename Derived>
Eigen::Index bareiss_rank(Eigen::MatrixBase<Derived> const& input,
                          std::vector<Eigen::Index>* pivot_cols = nullptr) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> M = input;
  const Eigen::Index rows = M.rows(), cols = M.cols();
  Scalar prev_pivot = Scalar(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (!is_zero(M(i, col))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) M.row(pivot_row).swap(M.row(rank));
    const Scalar pivot = M(rank, col);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        M(i, j) = exact_quotient(M(i, j) * pivot - M(i, col) * M(rank, j), prev_pivot);
      }
      M(i, col) = Scalar(0);
    }
    prev_pivot = pivot;
    ++rank;
    if (pivot_cols) pivot_cols->push_back(col);
  }
  return rank;
}

// Exact rank of a rational matrix: denominators are cleared row-wise, then
// integer Bareiss elimination runs on the result.
Eigen::Index matrix_rank(const QMatrix& M);

struct RowReduction {
  QMatrix rref;                          // reduced row-echelon form, zero rows dropped
  std::vector<Eigen::Index> pivot_cols;  // one per nonzero row, increasing
  Eigen::Index rank = 0;
};

// Gauss-Jordan over the rationals; first nonzero pivot, pivot normalized to 1.
// The output is the canonical representative of the row space.
RowReduction row_reduce(const QMatrix& M);

// Basis of the right null space, canonicalized: the rows of the returned
// matrix are the RREF of the standard free-variable basis. Row count equals
// cols - rank; a 0 x cols matrix means the kernel is trivial.
QMatrix kernel_basis(const QMatrix& M);

struct PivotSelection {
  std::vector<Eigen::Index> rows;  // original row indices, in pivot order
  std::vector<Eigen::Index> cols;  // pivot columns, ascending
};

// rank-many rows and columns of M whose intersection is a nonsingular square
// submatrix (the pivot rows/columns of an exact elimination). Every prefix of
// the selection is itself nonsingular.
PivotSelection pivot_submatrix(const QMatrix& M);

// Entrywise substitution of a rational point into a matrix of linear forms.
// The point length must equal the column (= variable) count.
QMatrix evaluate(const LinFormMatrix& M, const QVector& point);

}  // namespace resovar

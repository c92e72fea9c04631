#include "resovar/cup.hpp"

#include <stdexcept>
#include <string>

namespace resovar {

void CupData::check_key(int i, int j, int k) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::invalid_argument("CupData: index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range 1.." + std::to_string(n_));
  if (k < 1 || k > m_)
    throw std::invalid_argument("CupData: H^2 index " + std::to_string(k) +
                                " out of range 1.." + std::to_string(m_));
}

void CupData::set(int i, int j, int k, const Rational& value) {
  check_key(i, j, k);
  if (i >= j)
    throw std::invalid_argument("CupData: keys require i < j, got (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
  if (is_zero(value))
    constants_.erase(Key{i, j, k});
  else
    constants_[Key{i, j, k}] = value;
}

Rational CupData::operator()(int i, int j, int k) const {
  check_key(i, j, k);
  if (i == j) return Rational(0);
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = constants_.find(Key{i, j, k});
  if (it == constants_.end()) return Rational(0);
  return flip ? Rational(-it->second) : it->second;
}

QVector cup_product(const CupData& c, const QVector& u, const QVector& v) {
  if (u.size() != c.n() || v.size() != c.n())
    throw std::invalid_argument("cup_product: vector length does not match n");
  QVector out = QVector::Zero(c.m());
  for (const auto& [key, value] : c.constants()) {
    const auto [i, j, k] = key;
    // value * (u_i v_j - u_j v_i) covers both orderings of the pair.
    out(k - 1) += value * (u(i - 1) * v(j - 1) - u(j - 1) * v(i - 1));
  }
  return out;
}

CupData change_basis_h1(const CupData& c, const QMatrix& B) {
  const Eigen::Index n = c.n();
  if (B.rows() != n || B.cols() != n)
    throw std::invalid_argument("change_basis_h1: matrix must be n x n");
  if (matrix_rank(B) != n) throw std::invalid_argument("change_basis_h1: matrix is singular");
  CupData out(n, c.m());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= c.m(); ++k) {
        Rational sum(0);
        for (const auto& [key, value] : c.constants()) {
          const auto [p, q, kk] = key;
          if (kk != k) continue;
          sum += value * (B(p - 1, i - 1) * B(q - 1, j - 1) - B(q - 1, i - 1) * B(p - 1, j - 1));
        }
        out.set(i, j, k, sum);
      }
    }
  }
  return out;
}

CupData change_basis_h2(const CupData& c, const QMatrix& A) {
  const Eigen::Index m = c.m();
  if (A.rows() != m || A.cols() != m)
    throw std::invalid_argument("change_basis_h2: matrix must be m x m");
  if (matrix_rank(A) != m) throw std::invalid_argument("change_basis_h2: matrix is singular");
  CupData out(c.n(), m);
  for (int i = 1; i <= c.n(); ++i) {
    for (int j = i + 1; j <= c.n(); ++j) {
      for (int l = 1; l <= m; ++l) {
        Rational sum(0);
        for (int k = 1; k <= m; ++k) {
          Rational v = c(i, j, k);
          if (!is_zero(v)) sum += A(l - 1, k - 1) * v;
        }
        out.set(i, j, l, sum);
      }
    }
  }
  return out;
}

}  // namespace resovar

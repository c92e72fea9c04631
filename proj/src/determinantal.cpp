#include "resovar/determinantal.hpp"

#include <stdexcept>
#include <string>

namespace resovar {

namespace detail {

std::vector<std::vector<Eigen::Index>> subsets_lex(Eigen::Index n, Eigen::Index k) {
  std::vector<std::vector<Eigen::Index>> out;
  if (k < 0 || k > n) return out;
  std::vector<Eigen::Index> current(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    // Next subset in lexicographic order.
    Eigen::Index pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (Eigen::Index i = pos + 1; i < k; ++i)
      current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

}  // namespace detail

Polynomial determinant(const LinFormMatrix& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("determinant: matrix is " + std::to_string(M.rows()) + " x " +
                                std::to_string(M.cols()) + ", not square");
  if (M.rows() <= 6) return detail::det_cofactor(M);
  return detail::det_bareiss(M);
}

Polynomial minor_det(const LinFormMatrix& M, const std::vector<Eigen::Index>& rows,
                     const std::vector<Eigen::Index>& cols) {
  const auto s = static_cast<Eigen::Index>(rows.size());
  LinFormMatrix sub(s, s);
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j)
      sub(i, j) = M(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
  return determinant(sub);
}

void for_each_minor(const LinFormMatrix& M, Eigen::Index s,
                    const std::function<bool(const std::vector<Eigen::Index>&,
                                             const std::vector<Eigen::Index>&,
                                             const Polynomial&)>& visit) {
  const auto row_sets = detail::subsets_lex(M.rows(), s);
  const auto col_sets = detail::subsets_lex(M.cols(), s);
  for (const auto& rows : row_sets)
    for (const auto& cols : col_sets)
      if (!visit(rows, cols, minor_det(M, rows, cols))) return;
}

IdealGens minors(const LinFormMatrix& M, Eigen::Index s) {
  IdealGens out;
  if (s <= 0) {
    // rank <= s-1 < 0 holds nowhere; the empty determinant is 1.
    out.unit = true;
    out.generators.push_back(Polynomial(1));
    return out;
  }
  if (s > std::min(M.rows(), M.cols())) {
    return out;  // no s x s submatrix: zero ideal, rank <= s-1 everywhere
  }
  for_each_minor(M, s, [&out](const auto&, const auto&, const Polynomial& det) {
    out.generators.push_back(det);
    return true;
  });
  return out;
}

std::optional<std::pair<Eigen::Index, Eigen::Index>> skew_violation(const LinFormMatrix& M) {
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = i; j < M.cols(); ++j)
      if (!(M(i, j) + M(j, i)).is_zero()) return std::make_pair(i + 1, j + 1);
  return std::nullopt;
}

namespace {

Polynomial pfaffian_memo(const LinFormMatrix& M, std::uint32_t mask,
                         std::vector<std::optional<Polynomial>>& memo) {
  if (mask == 0) return Polynomial(1);
  auto& slot = memo[mask];
  if (slot) return *slot;
  const int first = __builtin_ctz(mask);
  const std::uint32_t rest = mask & ~(std::uint32_t(1) << first);
  Polynomial acc;
  int position = 0;
  for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1, ++position) {
    const int j = __builtin_ctz(bits);
    const Polynomial& entry = M(first, j);
    if (!entry.is_zero()) {
      Polynomial sub = pfaffian_memo(M, rest & ~(std::uint32_t(1) << j), memo);
      Polynomial contrib = entry * sub;
      if (position % 2 == 0)
        acc += contrib;
      else
        acc -= contrib;
    }
  }
  slot = acc;
  return acc;
}

}  // namespace

Polynomial pfaffian(const LinFormMatrix& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("pfaffian: matrix is " + std::to_string(M.rows()) + " x " +
                                std::to_string(M.cols()) + ", not square");
  if (M.rows() % 2 != 0)
    throw std::invalid_argument("pfaffian: size " + std::to_string(M.rows()) +
                                " is odd; an even-size skew-symmetric matrix is required");
  if (auto bad = skew_violation(M))
    throw std::invalid_argument("pfaffian: matrix is not skew-symmetric at entry (" +
                                std::to_string(bad->first) + ", " + std::to_string(bad->second) +
                                "): M(i,j) + M(j,i) != 0");
  if (M.rows() > 31) throw std::invalid_argument("pfaffian: size > 31 not supported");
  const std::uint32_t full = (M.rows() == 0) ? 0 : ((std::uint32_t(1) << M.rows()) - 1);
  std::vector<std::optional<Polynomial>> memo(std::size_t(full) + 1);
  return pfaffian_memo(M, full, memo);
}

}  // namespace resovar

#include "semiconj/linalg.hpp"

#include <utility>

namespace semiconj {

std::optional<LinearSolution> solve_linear(Matrix m, std::vector<ExactScalar> rhs, std::size_t cols) {
  const std::size_t rows = rhs.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const ExactScalar inv = ExactScalar(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const ExactScalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
      }
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  LinearSolution sol;
  sol.x.assign(cols, ExactScalar(0));
  for (std::size_t i = 0; i < r; ++i) sol.x[pivot_col[i]] = rhs[i];
  sol.rank = r;
  sol.unique = r == cols;
  return sol;
}

}  // namespace semiconj

#pragma once

#include <optional>
#include <vector>

#include "semiconj/scalar.hpp"

namespace semiconj {

using Matrix = std::vector<std::vector<ExactScalar>>;

struct LinearSolution {
  std::vector<ExactScalar> x;  ///< particular solution, free variables set to zero
  std::size_t rank = 0;
  bool unique = false;
};

/// Solves M x = rhs exactly by Gauss-Jordan elimination. Returns nullopt when
/// the system is inconsistent. M has rhs.size() rows and `cols` columns.
std::optional<LinearSolution> solve_linear(Matrix m, std::vector<ExactScalar> rhs, std::size_t cols);

}  // namespace semiconj

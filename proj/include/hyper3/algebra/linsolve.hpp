#pragma once

#include <vector>

#include "hyper3/algebra/rat.hpp"

namespace hyper3 {

using RatMatrix = std::vector<std::vector<Rat>>;

struct LinearSolution {
  enum class Kind { Unique, Parametric, Inconsistent };
  Kind kind = Kind::Inconsistent;
  int rank = 0;
  /// A particular solution (free variables set to zero); empty when inconsistent.
  std::vector<Rat> solution;
  /// Basis of the null space; empty unless Parametric.
  std::vector<std::vector<Rat>> nullspace;
};

/// Solves A x = b exactly. Rows are scaled to integers and reduced by
/// fraction-free (Bareiss) elimination.
LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace hyper3

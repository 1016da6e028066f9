#pragma once

#include <optional>

#include "monoloc/rational.hpp"

namespace monoloc {

Integer default_combination_bound(const std::vector<IntVector>& gens, const IntVector& x);

/// n in N0^|gens| with sum n_i g_i = x and every n_i <= bound, if one exists.
/// Depth-first search with interval pruning on the remaining generators.
std::optional<IntVector> bounded_nonneg_combination(const std::vector<IntVector>& gens, const IntVector& x,
                                                    const Integer& bound);

inline std::optional<IntVector> bounded_nonneg_combination(const std::vector<IntVector>& gens,
                                                           const IntVector& x) {
  return bounded_nonneg_combination(gens, x, default_combination_bound(gens, x));
}

}  // namespace monoloc

#pragma once

#include <optional>

#include "monoloc/rational.hpp"

namespace monoloc {

/// Exact feasibility of  sum_j lambda_j columns[j] = target,  lambda >= 0.
/// Phase-I simplex with Bland's rule; returns one feasible lambda.
std::optional<RatVector> nonneg_combination(const std::vector<RatVector>& columns,
                                            const RatVector& target);

}  // namespace monoloc

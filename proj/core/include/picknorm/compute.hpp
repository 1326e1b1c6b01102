#pragma once

#include "picknorm/problem.hpp"

namespace picknorm {

/// Validates the problem and dispatches to its backend. Every result satisfies
/// 0 ≤ lower ≤ upper and lower ≥ max_i |a_i| (the trivial floor).
[[nodiscard]] NormResult compute_np_norm(const InterpolationProblem& problem);

}  // namespace picknorm

#pragma once

#include <cstdint>
#include <random>

#include "picknorm/problem.hpp"

namespace picknorm::cli {

/// Generator for item `index` of a named stream; independent of the order in
/// which items are produced, so parallel runs stay reproducible.
[[nodiscard]] std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t stream,
                                       std::uint64_t index);

/// Random complex number with real and imaginary parts uniform in [-scale, scale].
[[nodiscard]] Complex random_complex(std::mt19937_64& rng, double scale = 1.0);

/// Random point with modulus at most `radius`, uniform in area.
[[nodiscard]] Complex random_disc_point(std::mt19937_64& rng, double radius);

/// A small random valid problem for the backend: hardy/analytic sites with
/// |λ| ≤ 0.9, Wiener sites at angles 2πp/N with N ≤ 12, torus frequencies in
/// [-6, 6], finite algebras of dimension ≤ 6 (full, or spanned by the
/// indicators of a coordinate partition with at most one site per block).
[[nodiscard]] InterpolationProblem random_problem(Backend backend, std::mt19937_64& rng,
                                                  double tolerance);

}  // namespace picknorm::cli

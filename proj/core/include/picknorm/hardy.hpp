#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>
#include <vector>

#include "picknorm/problem.hpp"

namespace picknorm::hardy {

struct PickMatrix {
  Eigen::MatrixXcd entries;
  double level = 1.0;
  std::vector<Complex> lambdas;
  std::vector<Complex> zs;
};

/// entries(i, j) = (1 - t⁻²·conj(z_j)·z_i) / (1 - conj(λ_j)·λ_i). The upper
/// triangle is filled by conjugating the lower one, so the result is exactly
/// Hermitian.
[[nodiscard]] PickMatrix build_pick_matrix(std::span<const Complex> lambdas,
                                           std::span<const Complex> zs, double t);

struct FeasibilityVerdict {
  bool feasible = false;
  double min_eigenvalue = 0.0;
  double psd_slack = 0.0;
};

/// Positive semidefiniteness of the Pick matrix at level t. Without an
/// explicit slack, 1e-12·max(1, ‖P‖_F) is used.
[[nodiscard]] FeasibilityVerdict is_feasible(std::span<const Complex> lambdas,
                                             std::span<const Complex> zs, double t,
                                             std::optional<double> psd_slack = std::nullopt);

/// inf{t : Pick matrix at t is PSD}, bracketed by bisection to absolute width
/// ≤ tolerance.
[[nodiscard]] NormResult np_norm_hardy(std::span<const Complex> lambdas,
                                       std::span<const Complex> zs, double tolerance);

/// Pseudohyperbolic distance |a - b| / |1 - conj(b)·a|.
[[nodiscard]] double pseudohyperbolic(Complex a, Complex b);

}  // namespace picknorm::hardy

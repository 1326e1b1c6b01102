#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "picknorm/problem.hpp"

namespace picknorm::finite {

/// Throws InvalidArgument for bad weights/exponent/basis shapes and
/// NotAnAlgebra when the basis span is not closed under pointwise products.
void validate_algebra(const FiniteAlgebra& alg);

/// Largest least-squares residual of a pairwise basis product against the
/// span, relative to max(1, |product|). Zero for the full algebra.
[[nodiscard]] double closure_defect(const FiniteAlgebra& alg);

/// A norm on Cⁿ of one of the three families, with no algebra constraints
/// on the weights (dual norms have weights below one).
struct NormSpec {
  NormKind kind = NormKind::kWeightedSup;
  std::vector<double> weights;
  double p = 1.0;
};

[[nodiscard]] NormSpec norm_of(const FiniteAlgebra& alg);
/// sup(w) ↔ ℓ1(1/w), ℓp ↔ ℓq with 1/p + 1/q = 1.
[[nodiscard]] NormSpec dual_norm(const NormSpec& spec);
[[nodiscard]] double evaluate(const NormSpec& spec, std::span<const Complex> x);
[[nodiscard]] double algebra_norm(const FiniteAlgebra& alg, std::span<const Complex> x);

/// min ‖x‖ over x ∈ x0 + span(z). The columns of z must be orthonormal. The
/// returned primal lists every coordinate of the minimizer (location = index,
/// 1-based).
[[nodiscard]] NormResult minimize_over_coset(const NormSpec& spec, const Eigen::VectorXcd& x0,
                                             const Eigen::MatrixXcd& z, double tolerance);

/// Coordinates are 1-based; targets[i] is prescribed at subset[i].
[[nodiscard]] NormResult np_norm_closed_form(const FiniteAlgebra& alg, std::span<const int> subset,
                                             std::span<const Complex> targets);

/// Quotient norm over {x ∈ span(basis) : x_i = a_i, i ∈ subset} by convex
/// optimization. Throws InfeasibleCoset when no element of the algebra takes
/// the targets.
[[nodiscard]] NormResult np_norm_generic(const FiniteAlgebra& alg, std::span<const int> subset,
                                         std::span<const Complex> targets, double tolerance);

/// Closed form on the full algebra, generic otherwise.
[[nodiscard]] NormResult np_norm(const FiniteAlgebra& alg, std::span<const int> subset,
                                 std::span<const Complex> targets, double tolerance);

struct NPInftyWitness {
  std::vector<int> subset;
  std::vector<Complex> targets;
  double np_value = 0.0;   ///< certified lower bound of the NP norm
  double np_upper = 0.0;
  double sup_value = 0.0;
};

struct NPInftyVerdict {
  bool is_np_infty = true;
  /// True when the search is conclusive; only the full algebras, where the
  /// closed forms settle every tuple, qualify.
  bool exact = false;
  std::optional<NPInftyWitness> witness;
  int problems_checked = 0;
  double worst_gap = 0.0;  ///< max over checked problems of NP lower - sup
};

/// Searches subsets of size ≤ min(n, 4) with sign patterns, coordinate
/// indicators, then sample_budget seeded random targets. Stops at the first
/// NP norm exceeding the sup of its targets by more than tolerance.
[[nodiscard]] NPInftyVerdict np_infty_test(const FiniteAlgebra& alg, int sample_budget,
                                           std::uint64_t seed, double tolerance = 1e-9);

/// μ ≠ 0 with Σ_i μ_i x_i = 0 for every basis vector x, normalized to
/// Σ|μ_i| = 1 with the first nonzero entry real positive; none when the basis
/// spans Cⁿ.
[[nodiscard]] std::optional<std::vector<Complex>> annihilating_functional(
    const std::vector<std::vector<Complex>>& basis, std::size_t n);

enum class ScatteredBranch {
  kDense,                    ///< no annihilator, nothing to contradict
  kInterpolationImpossible,  ///< the sign targets are not taken by any element
  kNormExceedsTwo,           ///< every interpolant has norm > 2, so NP_∞ fails here
  kNormAtMostTwo,            ///< an interpolant of norm ≤ 2 exists (would contradict annihilation)
};

[[nodiscard]] std::string_view to_string(ScatteredBranch branch) noexcept;

struct ScatteredReport {
  ScatteredBranch branch = ScatteredBranch::kDense;
  bool closed_under_products = true;
  std::vector<Complex> mu;
  std::vector<int> order;  ///< 1-based coordinates by descending |μ|
  int n0 = 0;
  double head_mass = 0.0;
  double tail_mass = 0.0;
  std::vector<int> subset;
  std::vector<Complex> sign_targets;  ///< conj(μ_n)/|μ_n| on the head
  std::optional<NormResult> np;
  /// |Σ x_n μ_n| for the computed interpolant (annihilation makes it ~0).
  double pairing = 0.0;
  /// head - ‖x‖_∞·tail: positive would contradict annihilation.
  double chain_lower = 0.0;
  /// head / tail: every interpolant's sup norm is at least this.
  double implied_norm_lower = 0.0;
  std::string message;
};

/// The scattered-space dichotomy at finite scale. Bases that are not closed
/// under products are accepted and flagged.
[[nodiscard]] ScatteredReport scattered_contradiction_check(const FiniteAlgebra& alg,
                                                            double tolerance);

/// Basis matrix (n × d), the identity for the full algebra.
[[nodiscard]] Eigen::MatrixXcd basis_matrix(const FiniteAlgebra& alg);

}  // namespace picknorm::finite

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "picknorm/problem.hpp"

namespace picknorm::gleason {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// ‖δ_i - δ_j‖ in the dual of the finite algebra (1-based coordinates):
/// sup{|x_i - x_j| : ‖x‖ ≤ 1, x in the algebra}, computed as the minimal
/// dual norm over (e_i - e_j) + annihilator.
[[nodiscard]] Interval gleason_distance_finite(const FiniteAlgebra& alg, int i, int j,
                                               double tolerance = 1e-9);

struct HardyDistance {
  Interval interval;
  Complex best_c;        ///< zero of the extremal disc automorphism found
  bool tightened = false;  ///< upper bound moved from 2 to lower + tolerance
  bool search_stall = false;
};

/// Lower bound by maximizing |f(λ1) - f(λ2)| over automorphisms
/// f(z) = (z - c)/(1 - conj(c) z) (polar grid, then pattern search). The upper
/// bound is 2 unless the Pick matrix at level 1 of the found values scaled by
/// (1 + tolerance) is infeasible, in which case it is lower + tolerance.
[[nodiscard]] HardyDistance gleason_distance_hardy(Complex lambda1, Complex lambda2,
                                                   double tolerance = 1e-9);

enum class PartRelation { kSame, kDifferent, kUndecided };

[[nodiscard]] std::string_view to_string(PartRelation r) noexcept;

struct GleasonReport {
  Backend backend = Backend::kHardy;
  std::vector<Site> sites;
  std::vector<std::vector<Interval>> distances;
  std::vector<std::vector<PartRelation>> relation;
  /// Groups of 0-based site positions, each sorted, ordered by first member.
  std::vector<std::vector<int>> partition;
  double part_slack = 1e-6;
  bool search_stall = false;
};

/// Distances for every pair, then the transitive closure of
/// {distance upper < 2 - part_slack}. Supported for hardy and finite backends.
[[nodiscard]] GleasonReport part_partition(Backend backend, std::span<const Site> sites,
                                           const std::optional<FiniteAlgebra>& algebra,
                                           double part_slack = 1e-6, double tolerance = 1e-9);

struct Theorem4Pair {
  int i = 0;  ///< 0-based site positions
  int j = 0;
  NormResult np;           ///< NP norm of targets (1, -1) at the pair
  bool witness = false;    ///< np.lower > 1 + tolerance: the pair breaks NP_∞
  bool certified = false;  ///< np.upper ≤ 1 + tolerance: distance ≥ 2/np.upper
  double certified_distance = 0.0;
  std::optional<Interval> distance;  ///< computed distance, when the backend has one
  bool consistent = true;            ///< certified ⇒ distance upper ≥ 2/np.upper
};

struct Theorem4Report {
  std::vector<Theorem4Pair> pairs;
  bool any_witness = false;
  bool all_certified = false;
  bool passed = false;
  std::string message;
};

/// Pairwise check of the trivial-part argument: no witness ⇒ every pair is
/// certified at distance 2, and every certification agrees with the computed
/// distance where one exists.
[[nodiscard]] Theorem4Report theorem4_check(Backend backend, std::span<const Site> sites,
                                            const std::optional<FiniteAlgebra>& algebra,
                                            double tolerance = 1e-9);

}  // namespace picknorm::gleason

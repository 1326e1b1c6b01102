#pragma once

#include <optional>
#include <span>
#include <vector>

#include "picknorm/problem.hpp"

namespace picknorm::seqalg {

struct TruncationPlan {
  int degree = 16;        ///< K: retained indices 0..K or -K..K
  int grid_size = 1024;   ///< M: angular grid for sup certification
  double tail_margin = 1e-12;
};

/// A dual vector b for the constraint functionals, the proven bound on its
/// dual constraint, and the implied lower bound Re<b, a> / certified_sup.
struct DualCertificate {
  std::vector<Complex> b;
  double certified_sup = 0.0;
  double bound = 0.0;
};

/// Smallest K with r^{K+1}/(1-r) ≤ tail_margin for r = max|λ_i| < 1, capped
/// at 4096. Boundary sites (|λ| = 1) give the cap's floor of 64.
[[nodiscard]] TruncationPlan plan_analytic_wiener(std::span<const Complex> lambdas,
                                                  double tail_margin = 1e-12);

/// One solve of the ℓ1(Z₊) problem truncated to degree plan.degree, with no
/// refinement and no stall check.
[[nodiscard]] NormResult solve_analytic_wiener(std::span<const Complex> lambdas,
                                               std::span<const Complex> targets,
                                               const TruncationPlan& plan, double tolerance);

/// NP norm in ℓ1(Z₊), sites in the closed disc.
/// Throws TailBoundFailure or SolverStall when the bracket does not close.
[[nodiscard]] NormResult np_norm_analytic_wiener(std::span<const Complex> lambdas,
                                                 std::span<const Complex> targets,
                                                 double tolerance);

/// If every angle is 2π·p_j/N_j with N_j ≤ max_period, returns the least common
/// period N ≤ max_period and the numerators p_j·(N/N_j) mod N.
struct RationalAngles {
  long long period = 1;
  std::vector<long long> numerators;
};
[[nodiscard]] std::optional<RationalAngles> detect_rational_angles(std::span<const double> thetas,
                                                                   long long max_period = 4096);

/// NP norm in ℓ1(Z), sites on the circle. Rational angle sets are solved
/// exactly over one period of k; otherwise the window |k| ≤ K is doubled up to
/// 4096 and only the spectral floor is certified as a lower bound.
[[nodiscard]] NormResult np_norm_wiener(std::span<const double> thetas,
                                        std::span<const Complex> targets, double tolerance);

/// NP norm in L¹(T) at the Fourier coefficients ks (normalized Haar measure).
[[nodiscard]] NormResult np_norm_l1_torus(std::span<const long long> ks,
                                          std::span<const Complex> targets, double tolerance);

/// Re-verifies the certificate's dual constraint at a finer resolution than
/// any solver uses and returns the recomputed bound. Throws CertificateRejected
/// naming the offending frequency or angle when the recomputed constraint sup
/// exceeds the claimed one, or the bound drops by more than 1e-12.
double dual_certificate_check(const DualCertificate& cert, const InterpolationProblem& problem);

/// The certificate carried by a seqalg NormResult.
[[nodiscard]] DualCertificate certificate_of(const NormResult& result);

}  // namespace picknorm::seqalg

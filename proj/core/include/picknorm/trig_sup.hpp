#pragma once

#include <span>
#include <utility>
#include <vector>

#include "picknorm/problem.hpp"

namespace picknorm::trig {

/// q(θ) = Σ_i c_i e^{i k_i θ}.
struct TrigPolynomial {
  std::vector<long long> freqs;
  std::vector<Complex> coeffs;

  [[nodiscard]] Complex operator()(double theta) const;
  /// max k_i - min k_i; the degree of |q|² as a real trigonometric polynomial.
  [[nodiscard]] long long spread() const;
};

struct Peak {
  double angle = 0.0;
  double modulus = 0.0;
};

struct SupCertificate {
  int grid_size = 0;
  double grid_max = 0.0;        ///< max_m |q(θ_m)|
  double taylor_bound = 0.0;    ///< cubic Taylor per cell + quartic Bernstein remainder
  double bernstein_bound = 0.0; ///< grid_max / (1 - π·D/M), D the centred degree
  double certified_sup = 0.0;   ///< min of the two bounds, padded for rounding
  std::vector<Peak> peaks;      ///< Newton-refined local maxima, largest first
};

/// Upper bound on sup_θ |q(θ)| from M equispaced samples. Local maxima with
/// modulus ≥ peak_threshold are refined and returned.
[[nodiscard]] SupCertificate certify_sup(const TrigPolynomial& q, int grid_size,
                                         double peak_threshold);

/// Smallest power-of-two grid with at least min_grid points whose quartic
/// remainder factor spread⁴·(π/M)⁴/24 is at most rel_remainder, capped at
/// max_grid.
[[nodiscard]] int grid_for_remainder(long long spread, double rel_remainder, int min_grid = 64,
                                     int max_grid = 1 << 22);

/// e^{2πi m/M} for m = 0..M-1; cached per thread.
[[nodiscard]] const std::vector<Complex>& roots_of_unity(int m);

}  // namespace picknorm::trig

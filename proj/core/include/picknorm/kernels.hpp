#pragma once

#include <span>
#include <vector>

#include "picknorm/problem.hpp"

namespace picknorm::kernels {

enum class KernelKind { kFejer, kDlvp };

[[nodiscard]] std::string_view to_string(KernelKind kind) noexcept;

/// Trigonometric kernel given by its Fourier coefficients on |k| ≤ support().
struct KernelSpec {
  KernelKind kind = KernelKind::kDlvp;
  int order = 1;
  /// coeffs[k + support()] is the coefficient at k.
  std::vector<double> coeffs;

  [[nodiscard]] int support() const noexcept { return static_cast<int>(coeffs.size() / 2); }
  [[nodiscard]] double coeff(long long k) const noexcept;
};

/// Fejér: max(0, 1 - |k|/(n+1)). de la Vallée Poussin: min(1, 2 - |k|/l)
/// clamped to [0, 1], which equals 1 on |k| ≤ l.
[[nodiscard]] KernelSpec kernel_coeffs(KernelKind kind, int order);

/// Point value from the closed forms K_n(θ) = sin²((n+1)θ/2)/((n+1) sin²(θ/2))
/// and V_l = 2K_{2l-1} - K_{l-1}.
[[nodiscard]] double kernel_value(const KernelSpec& spec, double theta);

struct TorusAtom {
  double angle = 0.0;
  Complex weight;
};

/// Atoms plus an optional density sampled on M uniform points θ_m = 2πm/M,
/// against normalized Haar measure dθ/2π.
struct TorusMeasure {
  std::vector<TorusAtom> atoms;
  std::vector<Complex> density;

  /// Σ|atom weights| + (1/M)·Σ|density samples|.
  [[nodiscard]] double total_variation() const;
  /// Exact for atoms, M-point trapezoid rule for the density.
  [[nodiscard]] Complex fourier(long long k) const;
};

struct Convolution {
  std::vector<Complex> samples;  ///< (μ ∗ V)(2πm/M)
  double l1_norm = 0.0;          ///< (1/M)·Σ|samples|
};

/// Frequency-domain convolution sampled on M points. Throws GridTooCoarse
/// when M < 8·support(V).
[[nodiscard]] Convolution convolve(const TorusMeasure& mu, const KernelSpec& v, int grid);

/// (1/M)·Σ|f_m - g_m| for samples on a common grid.
[[nodiscard]] double grid_l1_distance(std::span<const Complex> f, std::span<const Complex> g);

/// (1/2π)∫|V_l| by the trapezoid rule, starting at `grid` (≥ 64·order) and
/// doubling until successive values differ by less than 1e-8.
[[nodiscard]] double kernel_l1_norm(int order, int grid, KernelKind kind = KernelKind::kDlvp);

struct ChainStep {
  int l = 0;
  int grid = 0;
  double f_l1 = 0.0;            ///< ‖μ ∗ V_l‖₁
  double kernel_l1 = 0.0;       ///< ‖V_l‖₁
  double coeff_error = 0.0;     ///< max_i |\hat f(k_i) - a_i|
  double slack_np_le_f = 0.0;   ///< ‖f‖₁ - NP lower: f itself interpolates
  double slack_f_le_vmu = 0.0;  ///< ‖V_l‖₁·‖μ‖ - ‖f‖₁
  double gap_to_mu = 0.0;       ///< ‖f‖₁ - ‖μ‖
};

struct ChainReport {
  std::vector<long long> ks;
  std::vector<Complex> targets;  ///< a_i = \hat μ(k_i)
  double mu_norm = 0.0;
  double epsilon = 0.0;
  NormResult np;
  std::vector<ChainStep> steps;
  bool coefficients_match = true;  ///< every coeff_error ≤ 1e-10
  /// NP lower - (‖μ‖ - ε/2), the smoothing inequality's slack; recorded only.
  double slack_np_vs_mu = 0.0;
};

/// Runs the smoothing chain for each l in ls (each must exceed max|k_i|).
[[nodiscard]] ChainReport example1_chain(const TorusMeasure& mu, std::span<const long long> ks,
                                         double epsilon, std::span<const int> ls);

}  // namespace picknorm::kernels

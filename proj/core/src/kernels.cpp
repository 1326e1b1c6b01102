#include "picknorm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "picknorm/error.hpp"
#include "picknorm/seqalg.hpp"
#include "picknorm/trig_sup.hpp"

namespace picknorm::kernels {

std::string_view to_string(KernelKind kind) noexcept {
  return kind == KernelKind::kFejer ? "fejer" : "dlvp";
}

double KernelSpec::coeff(long long k) const noexcept {
  const long long s = support();
  if (k < -s || k > s) return 0.0;
  return coeffs[static_cast<std::size_t>(k + s)];
}

KernelSpec kernel_coeffs(KernelKind kind, int order) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "kernel order must be at least 1");
  KernelSpec spec;
  spec.kind = kind;
  spec.order = order;
  const int support = kind == KernelKind::kFejer ? order : 2 * order;
  spec.coeffs.resize(static_cast<std::size_t>(2 * support + 1));
  for (int k = -support; k <= support; ++k) {
    const double ak = std::abs(static_cast<double>(k));
    double c = 0.0;
    if (kind == KernelKind::kFejer) {
      c = std::max(0.0, 1.0 - ak / (order + 1));
    } else {
      c = std::abs(k) <= order ? 1.0 : std::clamp(2.0 - ak / order, 0.0, 1.0);
    }
    spec.coeffs[static_cast<std::size_t>(k + support)] = c;
  }
  return spec;
}

namespace {

double fejer_value(int n, double theta) {
  const double s = std::sin(theta / 2.0);
  if (s == 0.0) return n + 1.0;
  const double r = std::sin((n + 1) * theta / 2.0) / s;
  return r * r / (n + 1);
}

}  // namespace

double kernel_value(const KernelSpec& spec, double theta) {
  if (spec.kind == KernelKind::kFejer) return fejer_value(spec.order, theta);
  return 2.0 * fejer_value(2 * spec.order - 1, theta) - fejer_value(spec.order - 1, theta);
}

double TorusMeasure::total_variation() const {
  double s = 0.0;
  for (const TorusAtom& a : atoms) s += std::abs(a.weight);
  if (!density.empty()) {
    double d = 0.0;
    for (const Complex& c : density) d += std::abs(c);
    s += d / static_cast<double>(density.size());
  }
  return s;
}

Complex TorusMeasure::fourier(long long k) const {
  Complex s{};
  for (const TorusAtom& a : atoms) s += a.weight * std::polar(1.0, -static_cast<double>(k) * a.angle);
  if (!density.empty()) {
    const auto m = static_cast<long long>(density.size());
    const auto& roots = trig::roots_of_unity(static_cast<int>(m));
    const long long kk = ((-k % m) + m) % m;
    Complex d{};
    for (long long j = 0; j < m; ++j) {
      d += density[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>((kk * j) % m)];
    }
    s += d / static_cast<double>(m);
  }
  return s;
}

Convolution convolve(const TorusMeasure& mu, const KernelSpec& v, int grid) {
  if (grid < 8 * v.support()) {
    throw Error(ErrorCode::kGridTooCoarse, "convolution grid " + std::to_string(grid) +
                                               " is below 8 × kernel support " +
                                               std::to_string(v.support()));
  }
  const int s = v.support();
  std::vector<Complex> spectrum(static_cast<std::size_t>(2 * s + 1));
  for (int k = -s; k <= s; ++k) {
    const double c = v.coeff(k);
    spectrum[static_cast<std::size_t>(k + s)] = c == 0.0 ? Complex{} : c * mu.fourier(k);
  }
  const auto m = static_cast<long long>(grid);
  const auto& roots = trig::roots_of_unity(grid);
  Convolution out;
  out.samples.assign(static_cast<std::size_t>(grid), Complex{});
  for (int k = -s; k <= s; ++k) {
    const Complex c = spectrum[static_cast<std::size_t>(k + s)];
    if (c == Complex{}) continue;
    const long long kk = ((k % m) + m) % m;
    for (long long j = 0; j < m; ++j) {
      out.samples[static_cast<std::size_t>(j)] += c * roots[static_cast<std::size_t>((kk * j) % m)];
    }
  }
  double l1 = 0.0;
  for (const Complex& c : out.samples) l1 += std::abs(c);
  out.l1_norm = l1 / grid;
  return out;
}

double grid_l1_distance(std::span<const Complex> f, std::span<const Complex> g) {
  if (f.size() != g.size() || f.empty()) {
    throw Error(ErrorCode::kLengthMismatch, "samples must share a nonempty grid");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += std::abs(f[i] - g[i]);
  return s / static_cast<double>(f.size());
}

double kernel_l1_norm(int order, int grid, KernelKind kind) {
  if (grid < 64 * order) {
    throw Error(ErrorCode::kGridTooCoarse, "kernel quadrature grid " + std::to_string(grid) +
                                               " is below 64 × order");
  }
  const KernelSpec spec = kernel_coeffs(kind, order);
  auto quad = [&](int m) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) {
      s += std::abs(kernel_value(spec, 2.0 * std::numbers::pi * j / m));
    }
    return s / m;
  };
  double prev = quad(grid);
  for (long long m = 2LL * grid; m <= (1LL << 26); m *= 2) {
    const double next = quad(static_cast<int>(m));
    if (std::abs(next - prev) < 1e-8) return next;
    prev = next;
  }
  throw Error(ErrorCode::kSolverStall, "kernel L1 quadrature did not settle by 2^26 points");
}

ChainReport example1_chain(const TorusMeasure& mu, std::span<const long long> ks, double epsilon,
                           std::span<const int> ls) {
  if (ks.empty()) throw Error(ErrorCode::kEmptyTargets, "no frequencies");
  ChainReport rep;
  rep.ks.assign(ks.begin(), ks.end());
  rep.epsilon = epsilon;
  long long kmax = 0;
  for (long long k : ks) kmax = std::max(kmax, std::abs(k));
  for (long long k : ks) rep.targets.push_back(mu.fourier(k));
  rep.mu_norm = mu.total_variation();
  rep.np = seqalg::np_norm_l1_torus(ks, rep.targets, 1e-8);

  for (int l : ls) {
    if (l <= kmax) {
      throw Error(ErrorCode::kInvalidArgument,
                  "kernel order " + std::to_string(l) + " must exceed max |k_i|");
    }
    const KernelSpec v = kernel_coeffs(KernelKind::kDlvp, l);
    int grid = 1024;
    while (grid < 16 * l || grid < static_cast<int>(mu.density.size())) grid *= 2;
    const Convolution f = convolve(mu, v, grid);

    ChainStep step;
    step.l = l;
    step.grid = grid;
    step.f_l1 = f.l1_norm;
    step.kernel_l1 = kernel_l1_norm(l, std::max(grid, 64 * l));
    TorusMeasure fm;
    fm.density = f.samples;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      step.coeff_error = std::max(step.coeff_error, std::abs(fm.fourier(ks[i]) - rep.targets[i]));
    }
    step.slack_np_le_f = step.f_l1 - rep.np.lower;
    step.slack_f_le_vmu = step.kernel_l1 * rep.mu_norm - step.f_l1;
    step.gap_to_mu = step.f_l1 - rep.mu_norm;
    rep.coefficients_match = rep.coefficients_match && step.coeff_error <= 1e-10;
    rep.steps.push_back(step);
  }
  rep.slack_np_vs_mu = rep.np.lower - (rep.mu_norm - epsilon / 2.0);
  return rep;
}

}  // namespace picknorm::kernels

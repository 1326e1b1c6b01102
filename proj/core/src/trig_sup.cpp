#include "picknorm/trig_sup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "picknorm/error.hpp"

namespace picknorm::trig {

Complex TrigPolynomial::operator()(double theta) const {
  Complex s{};
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    s += coeffs[i] * std::polar(1.0, static_cast<double>(freqs[i]) * theta);
  }
  return s;
}

long long TrigPolynomial::spread() const {
  if (freqs.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(freqs.begin(), freqs.end());
  return *hi - *lo;
}

const std::vector<Complex>& roots_of_unity(int m) {
  thread_local std::map<int, std::vector<Complex>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (cache.size() > 8) cache.clear();
  std::vector<Complex> table(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) table[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
  return cache.emplace(m, std::move(table)).first->second;
}

int grid_for_remainder(long long spread, double rel_remainder, int min_grid, int max_grid) {
  int m = 1;
  while (m < min_grid) m <<= 1;
  const double s4 = std::pow(static_cast<double>(spread), 4);
  while (m < max_grid) {
    const double d = std::numbers::pi / m;
    if (s4 * std::pow(d, 4) / 24.0 <= rel_remainder) break;
    m <<= 1;
  }
  return std::min(m, max_grid);
}

namespace {

struct Derivs {
  double g0, g1, g2, g3;
};

// Value and first three derivatives of |q|² at the point whose basis values
// are e_i = e^{i k_i θ}.
template <class Basis>
Derivs derivs_at(const TrigPolynomial& q, Basis&& basis) {
  Complex q0{}, q1{}, q2{}, q3{};
  for (std::size_t i = 0; i < q.freqs.size(); ++i) {
    const double k = static_cast<double>(q.freqs[i]);
    const Complex t = q.coeffs[i] * basis(i);
    const Complex ik(0.0, k);
    q0 += t;
    q1 += ik * t;
    q2 += -k * k * t;
    q3 += Complex(0.0, -k * k * k) * t;
  }
  const double g0 = std::norm(q0);
  const double g1 = 2.0 * std::real(std::conj(q0) * q1);
  const double g2 = 2.0 * std::real(std::conj(q0) * q2) + 2.0 * std::norm(q1);
  const double g3 = 2.0 * std::real(std::conj(q0) * q3) + 6.0 * std::real(std::conj(q1) * q2);
  return {g0, g1, g2, g3};
}

Derivs derivs_direct(const TrigPolynomial& q, double theta) {
  return derivs_at(q, [&](std::size_t i) {
    return std::polar(1.0, static_cast<double>(q.freqs[i]) * theta);
  });
}

// max of g0 + g1 δ + g2 δ²/2 + g3 δ³/6 over |δ| ≤ d.
double cubic_cell_max(const Derivs& g, double d) {
  auto value = [&](double x) { return g.g0 + x * (g.g1 + x * (g.g2 / 2.0 + x * g.g3 / 6.0)); };
  double best = std::max(value(-d), value(d));
  best = std::max(best, g.g0);
  const double a = g.g3 / 2.0;
  const double b = g.g2;
  const double c = g.g1;
  if (std::abs(a) > 1e-300) {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      const double qv = -0.5 * (b + std::copysign(sq, b));
      for (double x : {qv / a, qv != 0.0 ? c / qv : 0.0}) {
        if (std::abs(x) <= d) best = std::max(best, value(x));
      }
    }
  } else if (std::abs(b) > 1e-300) {
    const double x = -c / b;
    if (std::abs(x) <= d) best = std::max(best, value(x));
  }
  return best;
}

}  // namespace

SupCertificate certify_sup(const TrigPolynomial& q, int grid_size, double peak_threshold) {
  if (grid_size < 4) throw Error(ErrorCode::kGridTooCoarse, "sup certification needs M ≥ 4");
  SupCertificate out;
  out.grid_size = grid_size;
  double coeff_l1 = 0.0;
  for (const Complex& c : q.coeffs) coeff_l1 += std::abs(c);
  const long long spread = q.spread();
  if (spread == 0 || coeff_l1 == 0.0) {
    Complex s{};
    for (const Complex& c : q.coeffs) s += c;
    out.grid_max = out.taylor_bound = out.bernstein_bound = out.certified_sup = std::abs(s);
    if (out.grid_max >= peak_threshold) out.peaks.push_back({0.0, out.grid_max});
    return out;
  }

  const auto m = static_cast<long long>(grid_size);
  const auto& roots = roots_of_unity(grid_size);
  std::vector<long long> kmod(q.freqs.size());
  for (std::size_t i = 0; i < q.freqs.size(); ++i) kmod[i] = ((q.freqs[i] % m) + m) % m;

  const double h = 2.0 * std::numbers::pi / grid_size;
  const double d = h / 2.0;
  std::vector<double> g0(static_cast<std::size_t>(grid_size));
  double taylor_max = 0.0;
  for (long long j = 0; j < m; ++j) {
    const Derivs g = derivs_at(q, [&](std::size_t i) {
      return roots[static_cast<std::size_t>((kmod[i] * j) % m)];
    });
    g0[static_cast<std::size_t>(j)] = g.g0;
    taylor_max = std::max(taylor_max, cubic_cell_max(g, d));
  }
  const double gmax = *std::max_element(g0.begin(), g0.end());
  out.grid_max = std::sqrt(gmax);

  const double n = static_cast<double>(q.freqs.size());
  const double eps = std::numeric_limits<double>::epsilon();
  const double pad = 64.0 * n * eps * coeff_l1 * coeff_l1;

  const double rho = std::pow(static_cast<double>(spread) * d, 4) / 24.0;
  out.taylor_bound = rho < 1.0 ? std::sqrt((taylor_max + pad) / (1.0 - rho))
                               : std::numeric_limits<double>::infinity();
  const double centred = static_cast<double>(spread) / 2.0;
  const double bern = std::numbers::pi * centred / grid_size;
  out.bernstein_bound = bern < 1.0 ? (std::sqrt(gmax + pad)) / (1.0 - bern)
                                   : std::numeric_limits<double>::infinity();
  out.certified_sup = std::min(out.taylor_bound, out.bernstein_bound);
  out.certified_sup = std::min(out.certified_sup, coeff_l1);

  // Peaks: discrete local maxima, refined by Newton on (|q|²)' = 0.
  const double thr2 = peak_threshold * peak_threshold;
  for (long long j = 0; j < m; ++j) {
    const double v = g0[static_cast<std::size_t>(j)];
    if (v < thr2) continue;
    const double prev = g0[static_cast<std::size_t>((j + m - 1) % m)];
    const double next = g0[static_cast<std::size_t>((j + 1) % m)];
    if (!(v >= prev && v > next)) continue;
    double theta = h * static_cast<double>(j);
    for (int it = 0; it < 12; ++it) {
      const Derivs g = derivs_direct(q, theta);
      if (!(g.g2 < 0.0)) break;
      const double step = -g.g1 / g.g2;
      if (std::abs(step) > h) break;
      theta += step;
      if (std::abs(step) < 1e-15) break;
    }
    theta = std::fmod(theta, 2.0 * std::numbers::pi);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    const double mod = std::abs(q(theta));
    out.peaks.push_back({theta, std::max(mod, std::sqrt(v))});
    if (mod < std::sqrt(v)) out.peaks.back().angle = h * static_cast<double>(j);
  }
  // A flat |q| (one nonzero coefficient) has no strict local maximum.
  if (out.peaks.empty() && gmax >= thr2) {
    const auto j = std::max_element(g0.begin(), g0.end()) - g0.begin();
    out.peaks.push_back({h * static_cast<double>(j), out.grid_max});
  }
  std::stable_sort(out.peaks.begin(), out.peaks.end(),
                   [](const Peak& a, const Peak& b) { return a.modulus > b.modulus; });
  return out;
}

}  // namespace picknorm::trig

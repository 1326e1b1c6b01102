// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "picknorm/compute.hpp"
#include "picknorm/error.hpp"
#include "picknorm/finitemodel.hpp"
#include "picknorm/gleason.hpp"
#include "picknorm/hardy.hpp"
#include "picknorm/kernels.hpp"
#include "picknorm/seqalg.hpp"
#include "picknorm_cli/commands.hpp"
#include "picknorm_cli/random_problems.hpp"
#include "picknorm_cli/verify.hpp"

using namespace picknorm;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const cli::PropertyReport* find(const cli::VerifyReport& r, const std::string& name) {
  for (const auto& p : r.properties) {
    if (p.property == name) return &p;
  }
  return nullptr;
}

Outcome c1_single_site_hardy() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = cli::item_rng(2024, 1, i);
    const std::vector<Complex> l{cli::random_disc_point(rng, 0.95)};
    const std::vector<Complex> z{cli::random_complex(rng, 2.0)};
    const NormResult r = hardy::np_norm_hardy(l, z, 1e-10);
    worst = std::max({worst, std::abs(r.lower - std::abs(z[0])), std::abs(r.upper - std::abs(z[0]))});
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-9 && secs < 5.0, fmt("worst error %.2e, %.3f s", worst, secs)};
}

Outcome c2_schwarz() {
  const std::vector<Complex> l{0.0, 0.5};
  const std::vector<Complex> z{0.0, 0.25};
  const NormResult r = hardy::np_norm_hardy(l, z, 1e-10);
  // Schwarz lemma: f(0) = 0 forces |f(1/2)| ≤ ‖f‖/2, so the norm is 0.5.
  const double closed = 0.5;
  double scan = -1.0;
  for (int i = 1; i <= 10000; ++i) {
    const double t = i * 1e-4;
    Eigen::Matrix2cd p;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        p(a, b) = (1.0 - std::conj(z[static_cast<std::size_t>(a)]) * z[static_cast<std::size_t>(b)] / (t * t)) /
                  (1.0 - std::conj(l[static_cast<std::size_t>(a)]) * l[static_cast<std::size_t>(b)]);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(p, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) >= -1e-13) {
      scan = t;
      break;
    }
  }
  const double err = std::max(std::abs(r.lower - closed), std::abs(r.upper - closed));
  return {err <= 1e-9 && std::abs(scan - closed) <= 1e-4,
          fmt("bracket error %.2e, scan threshold %.4f", err, scan)};
}

Outcome c3_floor(const cli::VerifyReport& rep) {
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  int backends = 0;
  for (Backend b : kAllBackends) {
    const auto* p = find(rep, "floor_" + std::string(backend_name(b)));
    if (!p || p->checked != 1000 || !p->passed()) ok = false;
    if (p) worst = std::min(worst, p->worst_slack);
    ++backends;
  }
  return {ok && backends == 7, fmt("7 backends x 1000 problems, worst slack %.2e", worst)};
}

Outcome c4_monotone(const cli::VerifyReport& rep) {
  // Random levels from the suite, plus levels at or above each computed norm
  // so that every one of the 1000 problems exercises the implication.
  const auto* p = find(rep, "feasible_t_implies_2t");
  long violations = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = cli::item_rng(77, 4, i);
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<Complex> l, z;
    for (int k = 0; k < n; ++k) {
      l.push_back(cli::random_disc_point(rng, 0.95));
      z.push_back(cli::random_complex(rng, 1.0));
    }
    const NormResult r = hardy::np_norm_hardy(l, z, 1e-9);
    const double t = r.upper * std::uniform_real_distribution<double>(1.0, 3.0)(rng) * (1.0 + 1e-9);
    if (hardy::is_feasible(l, z, t).feasible && !hardy::is_feasible(l, z, 2.0 * t).feasible) ++violations;
  }
  const bool ok = p && p->passed() && violations == 0;
  return {ok, fmt("suite implications checked %.0f, norm-anchored violations %.0f of 1000",
                  p ? static_cast<double>(p->checked) : 0.0, static_cast<double>(violations))};
}

Outcome c5_l1_grid() {
  double worst_err = 0.0, worst_gap = 0.0;
  for (int ri = 0; ri < 5; ++ri) {
    for (int si = 0; si < 5; ++si) {
      const double r = 0.1 + 0.2 * ri;
      const double s = 0.1 + 0.2 * si;
      const std::vector<Complex> l{0.0, r};
      const std::vector<Complex> a{0.0, s};
      const NormResult res = seqalg::np_norm_analytic_wiener(l, a, 1e-9);
      worst_err = std::max({worst_err, std::abs(res.lower - s / r), std::abs(res.upper - s / r)});
      worst_gap = std::max(worst_gap, res.gap());
    }
  }
  return {worst_err <= 1e-6 && worst_gap <= 1e-6, fmt("worst error %.2e, worst gap %.2e", worst_err, worst_gap)};
}

Outcome c6_wiener() {
  const std::vector<double> th{0.0, 2.0 * kPi / 3.0};
  const std::vector<Complex> a{1.0, -1.0};
  const NormResult r = seqalg::np_norm_wiener(th, a, 1e-9);
  const double target = 2.0 / std::sqrt(3.0);
  const double err = std::max(std::abs(r.lower - target), std::abs(r.upper - target));
  return {err <= 1e-5, fmt("bracket [%.10f, %.10f], error %.2e", r.lower, r.upper, err)};
}

Outcome c7_torus() {
  InterpolationProblem p;
  p.backend = Backend::kL1Torus;
  p.sites = {IntegerCharacter{0}, IntegerCharacter{1}, IntegerCharacter{2}};
  p.targets = {1.0, 1.0, -1.0};
  const double s5 = std::sqrt(5.0);
  seqalg::DualCertificate cert;
  cert.b = {1.0 / s5, 1.0 / s5, -1.0 / s5};
  cert.certified_sup = 1.0;
  cert.bound = 3.0 / s5;
  double bound = -1.0;
  std::string why;
  try {
    bound = seqalg::dual_certificate_check(cert, p);
  } catch (const Error& e) {
    why = e.what();
  }
  const NormResult r = compute_np_norm(p);
  const bool ok = bound >= 3.0 / s5 - 1e-6 && r.lower >= 3.0 / s5 - 1e-6;
  return {ok, why.empty() ? fmt("hand certificate bound %.10f, engine lower %.10f", bound, r.lower)
                          : "hand certificate rejected: " + why};
}

Outcome c8_oracle(const cli::VerifyReport& rep) {
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  for (const char* k : {"weighted_sup", "weighted_l1", "lp"}) {
    const auto* p = find(rep, std::string("generic_vs_closed_form_") + k);
    if (!p || p->checked != 500 || !p->passed()) ok = false;
    if (p) worst = std::min(worst, p->worst_slack);
  }
  return {ok, fmt("3 norm kinds x 500 problems, worst slack %.2e against 1e-8", worst)};
}

Outcome c9_dlvp() {
  bool exact = true;
  double worst = 0.0;
  for (int l = 1; l <= 64; ++l) {
    const auto v = kernels::kernel_coeffs(kernels::KernelKind::kDlvp, l);
    for (int k = -l; k <= l; ++k) exact = exact && v.coeff(k) == 1.0;
    int grid = 64;
    while (grid < 16 * l) grid *= 2;
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
      auto rng = cli::item_rng(9, static_cast<std::uint64_t>(l), trial);
      const int degree = trial == 0 ? l : std::uniform_int_distribution<int>(0, l)(rng);
      std::vector<Complex> c(static_cast<std::size_t>(2 * degree + 1));
      for (Complex& x : c) x = cli::random_complex(rng, 1.0);
      kernels::TorusMeasure mu;
      for (int m = 0; m < grid; ++m) {
        Complex s{};
        for (int k = -degree; k <= degree; ++k) {
          s += c[static_cast<std::size_t>(k + degree)] * std::polar(1.0, 2.0 * kPi * k * m / grid);
        }
        mu.density.push_back(s);
      }
      const auto f = kernels::convolve(mu, v, grid);
      for (int m = 0; m < grid; ++m) {
        worst = std::max(worst, std::abs(f.samples[static_cast<std::size_t>(m)] - mu.density[static_cast<std::size_t>(m)]));
      }
    }
  }
  return {exact && worst <= 1e-10,
          std::string(exact ? "coefficients bit-exact" : "coefficient mismatch") +
              fmt(", worst reproduction error %.2e", worst)};
}

Outcome c10_smoothing() {
  const int grid = 8192;
  kernels::TorusMeasure mu;
  for (int m = 0; m < grid; ++m) mu.density.emplace_back(std::max(0.0, std::cos(2.0 * kPi * m / grid)));
  double prev = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  std::ostringstream os;
  os.precision(3);
  for (int l : {16, 32, 64, 128, 256}) {
    const auto f = kernels::convolve(mu, kernels::kernel_coeffs(kernels::KernelKind::kDlvp, l), grid);
    const double err = kernels::grid_l1_distance(f.samples, mu.density);
    decreasing = decreasing && err < prev;
    os << (l == 16 ? "" : " ") << err;
    prev = err;
  }
  return {decreasing && prev < 0.01, "errors " + os.str()};
}

Outcome c11_gleason() {
  using namespace gleason;
  const Interval l1 = gleason_distance_finite(FiniteAlgebra::l1({1, 1}), 1, 2);
  const Interval sup = gleason_distance_finite(FiniteAlgebra::sup({1, 1}), 1, 2);
  const double h = gleason_distance_hardy(0.0, 0.5).interval.lower;
  bool ok = std::abs(l1.lower - 1.0) <= 1e-8 && std::abs(l1.upper - 1.0) <= 1e-8 &&
            std::abs(sup.lower - 2.0) <= 1e-8 && std::abs(sup.upper - 2.0) <= 1e-8 &&
            std::abs(h - (4.0 - 2.0 * std::sqrt(3.0))) <= 1e-4;
  double prev = 0.0;
  for (double rho : {0.3, 0.5, 0.7, 0.9, 0.99}) {
    const double d = gleason_distance_hardy(0.0, rho).interval.lower;
    ok = ok && d > prev && d <= 2.0;
    prev = d;
  }
  return {ok, fmt("l1 %.10f, sup %.10f, hardy(0,0.5) %.6f", l1.lower, sup.lower, h) +
                  fmt(", hardy(0,0.99) %.6f", prev)};
}

Outcome c12_theorem4() {
  using namespace gleason;
  const std::vector<Site> s3{CoordinateIndex{1}, CoordinateIndex{2}, CoordinateIndex{3}};
  const Theorem4Report sup = theorem4_check(Backend::kFiniteSup, s3, FiniteAlgebra::sup({1, 1, 1}));
  bool ok = sup.passed && sup.all_certified && !sup.pairs.empty();
  for (const auto& p : sup.pairs) {
    ok = ok && std::abs(p.np.lower - 1.0) <= 1e-9 && std::abs(p.np.upper - 1.0) <= 1e-9 &&
         std::abs(p.certified_distance - 2.0) <= 1e-8;
  }
  const std::vector<Site> s2{CoordinateIndex{1}, CoordinateIndex{2}};
  const Theorem4Report l1 = theorem4_check(Backend::kFiniteL1, s2, FiniteAlgebra::l1({1, 1}));
  const std::vector<Site> disc{DiscPoint{0.0}, DiscPoint{0.5}};
  const Theorem4Report hardy = theorem4_check(Backend::kHardy, disc, std::nullopt);
  for (const Theorem4Report* r : {&l1, &hardy}) {
    ok = ok && r->passed && r->any_witness;
    for (const auto& p : r->pairs) ok = ok && !p.certified;
  }
  return {ok, fmt("sup pairs %.0f certified at distance 2; l1 and hardy report witnesses only",
                  static_cast<double>(sup.pairs.size()))};
}

Outcome c13_np_infty() {
  auto check = [](const FiniteAlgebra& alg, const std::vector<int>& subset, const std::vector<Complex>& a) {
    const auto v1 = finite::np_infty_test(alg, 50, 1);
    const auto v2 = finite::np_infty_test(alg, 50, 1);
    if (v1.is_np_infty || !v1.witness || !v2.witness) return false;
    return v1.witness->subset == subset && v1.witness->targets == a && v2.witness->subset == subset &&
           v2.witness->targets == a && std::abs(v1.witness->np_value - 2.0) <= 1e-9 &&
           std::abs(v1.witness->sup_value - 1.0) <= 1e-12 && v1.witness->np_value == v2.witness->np_value;
  };
  const bool l1 = check(FiniteAlgebra::l1({1, 1}), {1, 2}, {1.0, 1.0});
  const bool ws = check(FiniteAlgebra::sup({2, 1}), {1}, {1.0});
  return {l1 && ws, std::string("l1 witness ") + (l1 ? "reproduced" : "missing") + ", weighted sup witness " +
                        (ws ? "reproduced" : "missing")};
}

Outcome c14_verify_all() {
  const char* argv[] = {"picknorm", "verify", "all", "--seed", "1"};
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = cli::run_cli(5, argv, out, err);
  const double secs = seconds_since(t0);
  const std::string text = out.str();
  const bool any_fail = text.find("FAIL") != std::string::npos;
  return {code == 0 && !any_fail && secs < 120.0, fmt("exit %.0f, %.1f s", code, secs)};
}

}  // namespace

int main() {
  const cli::VerifyReport remark1 = cli::run_suite("remark1", 1);
  const cli::VerifyReport monotone = cli::run_suite("monotone_feasibility", 1);
  const cli::VerifyReport oracle = cli::run_suite("oracle_equivalence", 1);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"single-site Hardy norm equals |z|", c1_single_site_hardy},
      {"Schwarz example (0, 0.5) -> 0.5", c2_schwarz},
      {"sup floor on every backend", [&] { return c3_floor(remark1); }},
      {"Pick feasibility monotone in t", [&] { return c4_monotone(monotone); }},
      {"analytic Wiener (0, r) -> (0, s) gives s/r", c5_l1_grid},
      {"Wiener third roots example 2/sqrt(3)", c6_wiener},
      {"L1(T) lower bound via hand certificate", c7_torus},
      {"finite generic solver matches closed forms", [&] { return c8_oracle(oracle); }},
      {"de la Vallee Poussin coefficients and reproduction", c9_dlvp},
      {"smoothing chain for max(0, cos)", c10_smoothing},
      {"Gleason distance values", c11_gleason},
      {"NP versus Gleason consistency", c12_theorem4},
      {"NP_infinity witnesses reproduce", c13_np_infty},
      {"verify all --seed 1 under 120 s", c14_verify_all},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

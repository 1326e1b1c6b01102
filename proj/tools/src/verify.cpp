#include "picknorm_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "picknorm/compute.hpp"
#include "picknorm/error.hpp"
#include "picknorm/finitemodel.hpp"
#include "picknorm/gleason.hpp"
#include "picknorm/hardy.hpp"
#include "picknorm/kernels.hpp"
#include "picknorm/seqalg.hpp"
#include "picknorm_cli/random_problems.hpp"

namespace picknorm::cli {

void PropertyReport::record(double slack, const std::string& what) {
  ++checked;
  worst_slack = std::min(worst_slack, slack);
  if (slack < 0.0) {
    ++failures;
    if (note.empty()) note = what;
  }
}

void PropertyReport::fail(const std::string& what) {
  ++checked;
  ++failures;
  worst_slack = std::min(worst_slack, -std::numeric_limits<double>::infinity());
  if (note.empty()) note = what;
}

bool VerifyReport::passed() const noexcept {
  return !properties.empty() &&
         std::all_of(properties.begin(), properties.end(),
                     [](const PropertyReport& p) { return p.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "remark1", "monotone_feasibility", "oracle_equivalence", "kernels", "gleason", "np_infty", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

using Suite = std::vector<PropertyReport>;

PropertyReport make(const std::string& suite, const std::string& property) {
  PropertyReport p;
  p.suite = suite;
  p.property = property;
  return p;
}

std::string describe(std::size_t item, const std::string& what) {
  return "item " + std::to_string(item) + ": " + what;
}

// Evaluates fn(i) for i in [0, count) on a few threads; results land in
// index order so reports never depend on scheduling.
template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(8, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

struct Outcome {
  double slack = 0.0;
  std::string error;
};

// ---------------------------------------------------------------------------

Suite remark1(std::uint64_t seed) {
  Suite out;
  constexpr std::size_t kPerBackend = 1000;
  for (Backend b : kAllBackends) {
    PropertyReport floor = make("remark1", std::string("floor_") + std::string(backend_name(b)));
    PropertyReport order = make("remark1", std::string("bracket_") + std::string(backend_name(b)));
    const auto results = parallel_map<std::pair<Outcome, Outcome>>(kPerBackend, [&](std::size_t i) {
      auto rng = item_rng(seed, static_cast<std::uint64_t>(b) + 1, i);
      const InterpolationProblem p = random_problem(b, rng, 1e-7);
      try {
        const NormResult r = compute_np_norm(p);
        const double fl = sup_lower_bound(p.targets);
        return std::pair{Outcome{r.lower - (fl - 1e-7), {}},
                         Outcome{std::min(r.upper - r.lower, r.lower), {}}};
      } catch (const Error& e) {
        return std::pair{Outcome{-1.0, e.what()}, Outcome{-1.0, e.what()}};
      }
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& [f, o] = results[i];
      if (!f.error.empty()) {
        floor.fail(describe(i, f.error));
        order.fail(describe(i, o.error));
        continue;
      }
      floor.record(f.slack, describe(i, "lower bound below max|a_i| - 1e-7"));
      order.record(o.slack, describe(i, "bracket out of order"));
    }
    out.push_back(floor);
    out.push_back(order);
  }
  return out;
}

// ---------------------------------------------------------------------------

Suite monotone_feasibility(std::uint64_t seed) {
  PropertyReport mono = make("monotone_feasibility", "feasible_t_implies_2t");
  PropertyReport herm = make("monotone_feasibility", "pick_hermitian_exact");
  constexpr std::size_t kCount = 1000;
  struct Item {
    bool checked_mono = false;
    double mono_slack = 0.0;
    double herm_slack = 0.0;
    std::string error;
  };
  const auto results = parallel_map<Item>(kCount, [&](std::size_t i) {
    Item item;
    auto rng = item_rng(seed, 100, i);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<Complex> l, z;
    for (int k = 0; k < n; ++k) {
      l.push_back(random_disc_point(rng, 0.95));
      z.push_back(random_complex(rng, 1.0));
    }
    const double t = std::uniform_real_distribution<double>(0.05, 4.0)(rng);
    try {
      const auto pm = hardy::build_pick_matrix(l, z, t);
      const Eigen::MatrixXcd diff = pm.entries - pm.entries.adjoint();
      item.herm_slack = diff.cwiseAbs().maxCoeff() == 0.0 ? 0.0 : -1.0;
      const auto v1 = hardy::is_feasible(l, z, t);
      if (v1.feasible) {
        const auto v2 = hardy::is_feasible(l, z, 2.0 * t);
        item.checked_mono = true;
        item.mono_slack = v2.min_eigenvalue + v2.psd_slack;
      }
    } catch (const Error& e) {
      item.error = e.what();
    }
    return item;
  });
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Item& it = results[i];
    if (!it.error.empty()) {
      mono.fail(describe(i, it.error));
      herm.fail(describe(i, it.error));
      continue;
    }
    herm.record(it.herm_slack, describe(i, "Pick matrix not exactly Hermitian"));
    if (it.checked_mono) mono.record(it.mono_slack, describe(i, "feasible at t but not at 2t"));
  }
  return {mono, herm};
}

// ---------------------------------------------------------------------------

Suite oracle_equivalence(std::uint64_t seed) {
  Suite out;
  const NormKind kinds[] = {NormKind::kWeightedSup, NormKind::kWeightedL1, NormKind::kLp};
  for (NormKind kind : kinds) {
    PropertyReport prop = make("oracle_equivalence",
                               std::string("generic_vs_closed_form_") + std::string(to_string(kind)));
    const auto results = parallel_map<Outcome>(500, [&](std::size_t i) {
      auto rng = item_rng(seed, 200 + static_cast<std::uint64_t>(kind), i);
      const int dim = std::uniform_int_distribution<int>(1, 6)(rng);
      FiniteAlgebra alg;
      alg.norm_kind = kind;
      alg.weights.assign(static_cast<std::size_t>(dim), 1.0);
      if (kind == NormKind::kLp) {
        alg.p = std::uniform_real_distribution<double>(1.0, 4.0)(rng);
      } else {
        for (double& w : alg.weights) w = std::uniform_real_distribution<double>(1.0, 3.0)(rng);
      }
      std::vector<int> coords(static_cast<std::size_t>(dim));
      std::iota(coords.begin(), coords.end(), 1);
      std::shuffle(coords.begin(), coords.end(), rng);
      const int n = std::uniform_int_distribution<int>(1, dim)(rng);
      std::vector<int> subset(coords.begin(), coords.begin() + n);
      std::vector<Complex> a;
      for (int k = 0; k < n; ++k) a.push_back(random_complex(rng, 2.0));
      try {
        const NormResult c = finite::np_norm_closed_form(alg, subset, a);
        const NormResult g = finite::np_norm_generic(alg, subset, a, 1e-10);
        const double err = std::max(std::abs(g.lower - c.lower), std::abs(g.upper - c.upper));
        return Outcome{1e-8 - err, {}};
      } catch (const Error& e) {
        return Outcome{-1.0, e.what()};
      }
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].error.empty()) {
        prop.fail(describe(i, results[i].error));
      } else {
        prop.record(results[i].slack, describe(i, "generic differs from closed form by > 1e-8"));
      }
    }
    out.push_back(prop);
  }

  PropertyReport ident = make("oracle_equivalence", "analytic_wiener_s_over_r");
  for (int ri = 0; ri < 5; ++ri) {
    for (int si = 0; si < 5; ++si) {
      const double r = 0.1 + 0.2 * ri;
      const double s = 0.1 + 0.2 * si;
      const std::vector<Complex> l{0.0, r};
      const std::vector<Complex> a{0.0, s};
      try {
        const NormResult res = seqalg::np_norm_analytic_wiener(l, a, 1e-9);
        const double err = std::max(std::abs(res.lower - s / r), std::abs(res.upper - s / r));
        ident.record(std::min(1e-6 - err, 1e-6 - res.gap()),
                     "r=" + std::to_string(r) + " s=" + std::to_string(s));
      } catch (const Error& e) {
        ident.fail(e.what());
      }
    }
  }
  out.push_back(ident);

  PropertyReport single = make("oracle_equivalence", "hardy_single_site");
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = item_rng(seed, 300, i);
    const std::vector<Complex> l{random_disc_point(rng, 0.95)};
    const std::vector<Complex> z{random_complex(rng, 2.0)};
    try {
      const NormResult res = hardy::np_norm_hardy(l, z, 1e-9);
      const double m = std::abs(z[0]);
      single.record(1e-9 - std::max(std::abs(res.lower - m), std::abs(res.upper - m)),
                    describe(i, "single-site norm differs from |z|"));
    } catch (const Error& e) {
      single.fail(describe(i, e.what()));
    }
  }
  out.push_back(single);
  return out;
}

// ---------------------------------------------------------------------------

Suite kernels_suite(std::uint64_t seed) {
  using namespace kernels;
  PropertyReport p2 = make("kernels", "dlvp_property2_exact");
  PropertyReport p1 = make("kernels", "dlvp_finite_support");
  PropertyReport repro = make("kernels", "dlvp_reproduces_degree_le_l");
  PropertyReport fpos = make("kernels", "fejer_positive");
  PropertyReport fnorm = make("kernels", "fejer_l1_norm_one");
  PropertyReport smooth = make("kernels", "smoothing_convergence_max0cos");

  for (int l = 1; l <= 64; ++l) {
    const KernelSpec v = kernel_coeffs(KernelKind::kDlvp, l);
    bool ok = true;
    for (int k = -l; k <= l; ++k) ok = ok && v.coeff(k) == 1.0;
    p2.record(ok ? 0.0 : -1.0, "l=" + std::to_string(l));
    bool sup = v.support() == 2 * l && v.coeff(2 * l + 1) == 0.0 && v.coeff(-2 * l - 1) == 0.0;
    for (int k = -2 * l; k <= 2 * l; ++k) sup = sup && v.coeff(k) >= 0.0 && v.coeff(k) <= 1.0;
    p1.record(sup ? 0.0 : -1.0, "l=" + std::to_string(l));
  }

  const int orders[] = {1, 2, 3, 5, 8, 16, 32, 64};
  for (int l : orders) {
    for (std::size_t trial = 0; trial < 4; ++trial) {
      auto rng = item_rng(seed, 400 + static_cast<std::uint64_t>(l), trial);
      const int degree = std::uniform_int_distribution<int>(0, l)(rng);
      int grid = 64;
      while (grid < 16 * l) grid *= 2;
      std::vector<Complex> coeff(static_cast<std::size_t>(2 * degree + 1));
      for (Complex& c : coeff) c = random_complex(rng, 1.0);
      TorusMeasure mu;
      mu.density.resize(static_cast<std::size_t>(grid));
      for (int m = 0; m < grid; ++m) {
        Complex s{};
        for (int k = -degree; k <= degree; ++k) {
          s += coeff[static_cast<std::size_t>(k + degree)] *
               std::polar(1.0, 2.0 * std::numbers::pi * k * m / grid);
        }
        mu.density[static_cast<std::size_t>(m)] = s;
      }
      const Convolution f = convolve(mu, kernel_coeffs(KernelKind::kDlvp, l), grid);
      double err = 0.0;
      for (int m = 0; m < grid; ++m) {
        err = std::max(err, std::abs(f.samples[static_cast<std::size_t>(m)] -
                                     mu.density[static_cast<std::size_t>(m)]));
      }
      repro.record(1e-10 - err, "l=" + std::to_string(l) + " degree=" + std::to_string(degree));
    }
  }

  for (int n = 1; n <= 64; ++n) {
    const KernelSpec k = kernel_coeffs(KernelKind::kFejer, n);
    TorusMeasure delta;
    delta.atoms.push_back({0.0, 1.0});
    int grid = 64;
    while (grid < 8 * n) grid *= 2;
    const Convolution f = convolve(delta, k, grid);
    double lowest = std::numeric_limits<double>::infinity();
    for (const Complex& c : f.samples) lowest = std::min(lowest, c.real());
    fpos.record(lowest + 1e-12, "n=" + std::to_string(n));
    const double norm = kernel_l1_norm(n, 64 * n, KernelKind::kFejer);
    fnorm.record(1e-10 - std::abs(norm - 1.0), "n=" + std::to_string(n));
  }

  constexpr int kGrid = 8192;
  TorusMeasure mu;
  mu.density.resize(kGrid);
  for (int m = 0; m < kGrid; ++m) {
    mu.density[static_cast<std::size_t>(m)] = std::max(0.0, std::cos(2.0 * std::numbers::pi * m / kGrid));
  }
  double prev = std::numeric_limits<double>::infinity();
  const int ls[] = {16, 32, 64, 128, 256};
  for (int l : ls) {
    const Convolution f = convolve(mu, kernel_coeffs(KernelKind::kDlvp, l), kGrid);
    const double err = grid_l1_distance(f.samples, mu.density);
    smooth.record(prev - err, "l=" + std::to_string(l) + " error did not decrease");
    prev = err;
  }
  smooth.record(0.01 - prev, "error at l=256 not below 0.01");
  return {p2, p1, repro, fpos, fnorm, smooth};
}

// ---------------------------------------------------------------------------

Suite gleason_suite(std::uint64_t seed) {
  using namespace gleason;
  PropertyReport exact = make("gleason", "finite_exact_values");
  PropertyReport hardy_value = make("gleason", "hardy_two_point_value");
  PropertyReport mono = make("gleason", "hardy_monotone_toward_2");
  PropertyReport range = make("gleason", "symmetry_and_range");
  PropertyReport duality = make("gleason", "finite_duality");
  PropertyReport t4 = make("gleason", "theorem4_consistency");
  PropertyReport parts = make("gleason", "part_partition");

  const Interval l1d = gleason_distance_finite(FiniteAlgebra::l1({1, 1}), 1, 2);
  exact.record(1e-8 - std::max(std::abs(l1d.lower - 1.0), std::abs(l1d.upper - 1.0)), "l1 w=1");
  const Interval supd = gleason_distance_finite(FiniteAlgebra::sup({1, 1}), 1, 2);
  exact.record(1e-8 - std::max(std::abs(supd.lower - 2.0), std::abs(supd.upper - 2.0)), "sup w=1");
  const Interval wsd = gleason_distance_finite(FiniteAlgebra::sup({2, 1}), 1, 2);
  exact.record(1e-8 - std::max(std::abs(wsd.lower - 1.5), std::abs(wsd.upper - 1.5)), "sup w=(2,1)");

  const HardyDistance h = gleason_distance_hardy(0.0, 0.5);
  hardy_value.record(1e-4 - std::abs(h.interval.lower - (4.0 - 2.0 * std::sqrt(3.0))), "(0, 0.5)");

  double prev = 0.0;
  for (double rho : {0.3, 0.5, 0.7, 0.9, 0.99}) {
    const HardyDistance d = gleason_distance_hardy(0.0, rho);
    mono.record(std::min(d.interval.lower - prev, 2.0 - d.interval.lower),
                "rho=" + std::to_string(rho));
    prev = d.interval.lower;
  }

  // Symmetric, in range, diagonal zero, on random Hardy and finite site sets.
  for (std::size_t i = 0; i < 10; ++i) {
    auto rng = item_rng(seed, 500, i);
    std::vector<Site> sites;
    for (int k = 0; k < 3; ++k) sites.push_back(DiscPoint{random_disc_point(rng, 0.9)});
    const GleasonReport rep = part_partition(Backend::kHardy, sites, std::nullopt);
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < 3; ++a) {
      slack = std::min(slack, rep.distances[a][a].upper == 0.0 ? 0.0 : -1.0);
      for (std::size_t b = 0; b < 3; ++b) {
        const Interval& d = rep.distances[a][b];
        const Interval& e = rep.distances[b][a];
        slack = std::min(slack, (d.lower == e.lower && d.upper == e.upper) ? 0.0 : -1.0);
        slack = std::min({slack, d.lower, 2.0 + 1e-9 - d.upper, d.upper - d.lower});
      }
    }
    range.record(slack, describe(i, "distance matrix asymmetric or out of range"));
  }

  const FiniteAlgebra algs[] = {FiniteAlgebra::sup({1, 1, 1}), FiniteAlgebra::sup({2, 1, 1.5}),
                                FiniteAlgebra::l1({1, 1, 1}), FiniteAlgebra::l1({1, 2, 1}),
                                FiniteAlgebra::lp(3, 2.0), FiniteAlgebra::lp(3, 1.5)};
  for (std::size_t ai = 0; ai < std::size(algs); ++ai) {
    const FiniteAlgebra& alg = algs[ai];
    const Interval d = gleason_distance_finite(alg, 1, 2);
    for (std::size_t i = 0; i < 100 / std::size(algs) + 1; ++i) {
      auto rng = item_rng(seed, 600 + ai, i);
      std::vector<Complex> a{random_complex(rng, 1.0), random_complex(rng, 1.0)};
      const std::vector<int> s{1, 2};
      const double nrm = finite::np_norm(alg, s, a, 1e-10).upper;
      if (nrm == 0.0) continue;
      for (Complex& z : a) z /= nrm;
      duality.record(d.upper + 1e-8 - std::abs(a[0] - a[1]), describe(i, "|a1 - a2| above distance"));
    }
  }

  {
    std::vector<Site> s3{CoordinateIndex{1}, CoordinateIndex{2}, CoordinateIndex{3}};
    const Theorem4Report r = theorem4_check(Backend::kFiniteSup, s3, FiniteAlgebra::sup({1, 1, 1}));
    t4.record(r.passed && r.all_certified ? 0.0 : -1.0, "finite sup w=1: " + r.message);
    for (const auto& pr : r.pairs) t4.record(pr.certified_distance - 2.0 / (1.0 + 1e-9), "sup pair");
    std::vector<Site> s2{CoordinateIndex{1}, CoordinateIndex{2}};
    const Theorem4Report rl = theorem4_check(Backend::kFiniteL1, s2, FiniteAlgebra::l1({1, 1}));
    t4.record(rl.passed && rl.any_witness && !rl.pairs[0].certified ? 0.0 : -1.0, "finite l1: " + rl.message);
    std::vector<Site> sh{DiscPoint{0.0}, DiscPoint{0.5}};
    const Theorem4Report rh = theorem4_check(Backend::kHardy, sh, std::nullopt);
    t4.record(rh.passed && rh.any_witness && !rh.pairs[0].certified ? 0.0 : -1.0, "hardy: " + rh.message);
  }

  {
    std::vector<Site> sh{DiscPoint{0.0}, DiscPoint{0.3}, DiscPoint{0.6}};
    const GleasonReport rh = part_partition(Backend::kHardy, sh, std::nullopt);
    parts.record(rh.partition.size() == 1 ? 0.0 : -1.0, "hardy (0, 0.3, 0.6) not one part");
    std::vector<Site> s2{CoordinateIndex{1}, CoordinateIndex{2}};
    const GleasonReport rs = part_partition(Backend::kFiniteSup, s2, FiniteAlgebra::sup({1, 1}));
    parts.record(rs.partition.size() == 2 ? 0.0 : -1.0, "finite sup not two singletons");
    const GleasonReport rl = part_partition(Backend::kFiniteL1, s2, FiniteAlgebra::l1({1, 1}));
    parts.record(rl.partition.size() == 1 ? 0.0 : -1.0, "finite l1 not one part");
  }
  return {exact, hardy_value, mono, range, duality, t4, parts};
}

// ---------------------------------------------------------------------------

Suite np_infty_suite(std::uint64_t seed) {
  using finite::np_infty_test;
  PropertyReport sup_true = make("np_infty", "unit_sup_is_np_infty");
  PropertyReport l1_w = make("np_infty", "l1_witness");
  PropertyReport ws_w = make("np_infty", "weighted_sup_witness");
  PropertyReport repro = make("np_infty", "witness_reproduces");
  PropertyReport sub = make("np_infty", "partition_subalgebra_sup_is_np_infty");

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto v = np_infty_test(FiniteAlgebra::sup(std::vector<double>(n, 1.0)), 50, seed);
    sup_true.record(v.is_np_infty && v.exact ? 0.0 : -1.0, "n=" + std::to_string(n));
  }

  auto check_witness = [&](PropertyReport& prop, const FiniteAlgebra& alg,
                           const std::vector<int>& subset, const std::vector<Complex>& targets) {
    const auto v1 = np_infty_test(alg, 50, seed);
    const auto v2 = np_infty_test(alg, 50, seed);
    const bool found = !v1.is_np_infty && v1.witness && v1.witness->subset == subset &&
                       v1.witness->targets == targets;
    const bool same = v2.witness && v1.witness && v2.witness->subset == v1.witness->subset &&
                      v2.witness->targets == v1.witness->targets &&
                      v2.witness->np_value == v1.witness->np_value;
    prop.record(found && same ? 0.0 : -1.0, "expected witness not regenerated");
    if (v1.witness) {
      const NormResult r = finite::np_norm(alg, v1.witness->subset, v1.witness->targets, 1e-10);
      const double gap0 = v1.witness->np_value - v1.witness->sup_value;
      const double gap1 = r.lower - sup_lower_bound(v1.witness->targets);
      repro.record(1e-10 - std::abs(gap1 - gap0), "witness gap changed on recomputation");
    }
  };
  check_witness(l1_w, FiniteAlgebra::l1({1, 1}), {1, 2}, {1.0, 1.0});
  check_witness(ws_w, FiniteAlgebra::sup({2, 1}), {1}, {1.0});

  for (std::size_t i = 0; i < 6; ++i) {
    auto rng = item_rng(seed, 700, i);
    const int dim = std::uniform_int_distribution<int>(2, 5)(rng);
    const int blocks = std::uniform_int_distribution<int>(1, dim - 1)(rng);
    std::vector<std::vector<Complex>> basis(static_cast<std::size_t>(blocks),
                                            std::vector<Complex>(static_cast<std::size_t>(dim)));
    for (int k = 0; k < dim; ++k) {
      const int b = k < blocks ? k : std::uniform_int_distribution<int>(0, blocks - 1)(rng);
      basis[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] = 1.0;
    }
    const auto v = np_infty_test(FiniteAlgebra::sup(std::vector<double>(static_cast<std::size_t>(dim), 1.0), basis),
                                 30, seed);
    sub.record(v.is_np_infty ? 0.0 : -1.0, describe(i, "partition subalgebra produced a witness"));
  }
  return {sup_true, l1_w, ws_w, repro, sub};
}

}  // namespace

VerifyReport run_suite(const std::string& name, std::uint64_t seed) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  VerifyReport report;
  auto add = [&](Suite s) {
    for (auto& p : s) report.properties.push_back(std::move(p));
  };
  const bool all = name == "all";
  if (all || name == "remark1") add(remark1(seed));
  if (all || name == "monotone_feasibility") add(monotone_feasibility(seed));
  if (all || name == "oracle_equivalence") add(oracle_equivalence(seed));
  if (all || name == "kernels") add(kernels_suite(seed));
  if (all || name == "gleason") add(gleason_suite(seed));
  if (all || name == "np_infty") add(np_infty_suite(seed));
  return report;
}

std::string format_report(const std::string& name, const VerifyReport& report) {
  std::ostringstream os;
  os.precision(6);
  long failures = 0;
  for (const PropertyReport& p : report.properties) {
    os << (p.passed() ? "PASS " : "FAIL ") << p.suite << '/' << p.property
       << " checked=" << p.checked << " failures=" << p.failures << " worst_slack=";
    if (std::isfinite(p.worst_slack)) {
      os << std::scientific << p.worst_slack << std::defaultfloat;
    } else {
      os << (p.worst_slack > 0 ? "inf" : "-inf");
    }
    if (!p.note.empty()) os << " first_failure=\"" << p.note << '"';
    os << '\n';
    failures += p.passed() ? 0 : 1;
  }
  os << "verify " << name << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
     << report.properties.size() - static_cast<std::size_t>(failures) << '/'
     << report.properties.size() << " properties)\n";
  return os.str();
}

}  // namespace picknorm::cli

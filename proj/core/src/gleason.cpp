#include "picknorm/gleason.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "picknorm/compute.hpp"
#include "picknorm/dense.hpp"
#include "picknorm/error.hpp"
#include "picknorm/finitemodel.hpp"
#include "picknorm/hardy.hpp"

namespace picknorm::gleason {

namespace {
constexpr double kDistanceCap = 2.0;
}

Interval gleason_distance_finite(const FiniteAlgebra& alg, int i, int j, double tolerance) {
  const auto n = static_cast<int>(alg.dimension());
  if (i < 1 || i > n || j < 1 || j > n) {
    throw Error(ErrorCode::kDomainViolation, "coordinate outside 1.." + std::to_string(n));
  }
  if (i == j) throw Error(ErrorCode::kDuplicateSite, "distance needs two distinct coordinates");
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
  e(i - 1) = 1.0;
  e(j - 1) = -1.0;
  const Eigen::MatrixXcd ann =
      alg.is_full() ? Eigen::MatrixXcd(n, 0) : linalg::null_space(finite::basis_matrix(alg).transpose());
  const NormResult r =
      finite::minimize_over_coset(finite::dual_norm(finite::norm_of(alg)), e, ann, tolerance);
  Interval out{r.lower, std::min(r.upper, kDistanceCap)};
  out.lower = std::min(out.lower, out.upper);
  return out;
}

namespace {

Complex automorphism(Complex c, Complex z) { return (z - c) / (1.0 - std::conj(c) * z); }

double spread(Complex c, Complex l1, Complex l2) {
  return std::abs(automorphism(c, l1) - automorphism(c, l2));
}

}  // namespace

HardyDistance gleason_distance_hardy(Complex lambda1, Complex lambda2, double tolerance) {
  if (!(std::abs(lambda1) < 1.0) || !(std::abs(lambda2) < 1.0)) {
    throw Error(ErrorCode::kDomainViolation, "points must lie in the open unit disc");
  }
  if (lambda1 == lambda2) throw Error(ErrorCode::kDuplicateSite, "points must differ");

  HardyDistance out;
  constexpr int kGrid = 64;
  double best = -1.0;
  for (int ri = 0; ri < kGrid; ++ri) {
    const double r = static_cast<double>(ri) / kGrid;
    for (int ai = 0; ai < (ri == 0 ? 1 : kGrid); ++ai) {
      const Complex c = std::polar(r, 2.0 * std::numbers::pi * ai / kGrid);
      const double v = spread(c, lambda1, lambda2);
      if (v > best) {
        best = v;
        out.best_c = c;
      }
    }
  }
  // Pattern search: compass moves with step halving on failure.
  double step = 1.0 / kGrid;
  const Complex moves[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int it = 0; it < 200 && step > 1e-16; ++it) {
    bool improved = false;
    for (const Complex& m : moves) {
      const Complex c = out.best_c + step * m;
      if (!(std::abs(c) < 1.0)) continue;
      const double v = spread(c, lambda1, lambda2);
      if (v > best) {
        best = v;
        out.best_c = c;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  out.search_stall = step > 1e-10;
  out.interval.lower = best;
  out.interval.upper = kDistanceCap;

  const Complex w1 = automorphism(out.best_c, lambda1) * (1.0 + tolerance);
  const Complex w2 = automorphism(out.best_c, lambda2) * (1.0 + tolerance);
  const Complex lam[] = {lambda1, lambda2};
  const Complex ws[] = {w1, w2};
  if (!hardy::is_feasible(lam, ws, 1.0).feasible && !out.search_stall) {
    out.tightened = true;
    out.interval.upper = std::min(kDistanceCap, best + tolerance);
  }
  out.search_stall = out.search_stall || !out.tightened;
  return out;
}

std::string_view to_string(PartRelation r) noexcept {
  switch (r) {
    case PartRelation::kSame: return "same";
    case PartRelation::kDifferent: return "different";
    case PartRelation::kUndecided: return "undecided";
  }
  return "unknown";
}

namespace {

Interval pair_distance(Backend backend, const Site& a, const Site& b,
                       const std::optional<FiniteAlgebra>& algebra, double tolerance,
                       bool& stall) {
  if (backend == Backend::kHardy) {
    const HardyDistance d = gleason_distance_hardy(std::get<DiscPoint>(a).value,
                                                   std::get<DiscPoint>(b).value, tolerance);
    stall = stall || d.search_stall;
    return d.interval;
  }
  if (is_finite_backend(backend)) {
    return gleason_distance_finite(*algebra, std::get<CoordinateIndex>(a).index,
                                   std::get<CoordinateIndex>(b).index, tolerance);
  }
  throw Error(ErrorCode::kInvalidArgument, "Gleason distances are available for the hardy and "
                                           "finite backends, not " +
                                               std::string(backend_name(backend)));
}

void validate_sites(Backend backend, std::span<const Site> sites,
                    const std::optional<FiniteAlgebra>& algebra) {
  InterpolationProblem p;
  p.backend = backend;
  p.sites.assign(sites.begin(), sites.end());
  p.targets.assign(sites.size(), Complex{});
  p.algebra = algebra;
  validate_problem(p);
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

GleasonReport part_partition(Backend backend, std::span<const Site> sites,
                             const std::optional<FiniteAlgebra>& algebra, double part_slack,
                             double tolerance) {
  if (sites.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "a part partition needs at least two sites");
  }
  validate_sites(backend, sites, algebra);
  const std::size_t n = sites.size();
  GleasonReport rep;
  rep.backend = backend;
  rep.sites.assign(sites.begin(), sites.end());
  rep.part_slack = part_slack;
  rep.distances.assign(n, std::vector<Interval>(n));
  rep.relation.assign(n, std::vector<PartRelation>(n, PartRelation::kSame));
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Interval d = pair_distance(backend, sites[i], sites[j], algebra, tolerance, rep.search_stall);
      rep.distances[i][j] = rep.distances[j][i] = d;
      PartRelation rel = PartRelation::kUndecided;
      if (d.upper < 2.0 - part_slack) {
        rel = PartRelation::kSame;
        parent[static_cast<std::size_t>(find_root(parent, static_cast<int>(i)))] =
            find_root(parent, static_cast<int>(j));
      } else if (d.lower >= 2.0 - part_slack) {
        rel = PartRelation::kDifferent;
      }
      rep.relation[i][j] = rep.relation[j][i] = rel;
    }
  }
  std::vector<int> group_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto root = static_cast<std::size_t>(find_root(parent, static_cast<int>(i)));
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(rep.partition.size());
      rep.partition.emplace_back();
    }
    rep.partition[static_cast<std::size_t>(group_of[root])].push_back(static_cast<int>(i));
  }
  return rep;
}

Theorem4Report theorem4_check(Backend backend, std::span<const Site> sites,
                              const std::optional<FiniteAlgebra>& algebra, double tolerance) {
  if (sites.size() < 2) throw Error(ErrorCode::kInvalidArgument, "Theorem-4 check needs two sites");
  validate_sites(backend, sites, algebra);
  Theorem4Report rep;
  const bool has_distance = backend == Backend::kHardy || is_finite_backend(backend);
  std::size_t undecided = 0;
  std::size_t inconsistent = 0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      Theorem4Pair pr;
      pr.i = static_cast<int>(i);
      pr.j = static_cast<int>(j);
      InterpolationProblem p;
      p.backend = backend;
      p.sites = {sites[i], sites[j]};
      p.targets = {Complex(1.0, 0.0), Complex(-1.0, 0.0)};
      p.tolerance = tolerance;
      p.algebra = algebra;
      pr.np = compute_np_norm(p);
      pr.witness = pr.np.lower > 1.0 + tolerance;
      pr.certified = !pr.witness && pr.np.upper <= 1.0 + tolerance;
      if (pr.certified) pr.certified_distance = 2.0 / pr.np.upper;
      if (!pr.witness && !pr.certified) ++undecided;
      if (has_distance) {
        bool stall = false;
        pr.distance = pair_distance(backend, sites[i], sites[j], algebra, tolerance, stall);
        if (pr.certified) pr.consistent = pr.distance->upper >= pr.certified_distance - 1e-8;
      }
      if (!pr.consistent) ++inconsistent;
      rep.any_witness = rep.any_witness || pr.witness;
      rep.pairs.push_back(std::move(pr));
    }
  }
  rep.all_certified = std::all_of(rep.pairs.begin(), rep.pairs.end(),
                                  [](const Theorem4Pair& p) { return p.certified; });
  rep.passed = (rep.any_witness || rep.all_certified) && inconsistent == 0;
  if (inconsistent > 0) {
    rep.message = std::to_string(inconsistent) + " certified pair(s) disagree with the computed distance";
  } else if (rep.any_witness) {
    rep.message = "NP(1,-1) exceeds 1 on some pair; no trivial-part claim from the implication";
  } else if (rep.all_certified) {
    rep.message = "every pair has NP(1,-1) = 1; all distances certified 2";
  } else {
    rep.message = std::to_string(undecided) + " pair(s) undecided: NP(1,-1) bracket straddles 1";
  }
  return rep;
}

}  // namespace picknorm::gleason

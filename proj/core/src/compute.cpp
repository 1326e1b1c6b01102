#include "picknorm/compute.hpp"

#include <algorithm>

#include "picknorm/error.hpp"
#include "picknorm/finitemodel.hpp"
#include "picknorm/hardy.hpp"
#include "picknorm/seqalg.hpp"

namespace picknorm {

namespace {

template <class T, class F>
std::vector<T> project_sites(const std::vector<Site>& sites, F&& get) {
  std::vector<T> out;
  out.reserve(sites.size());
  for (const Site& s : sites) out.push_back(get(s));
  return out;
}

}  // namespace

NormResult compute_np_norm(const InterpolationProblem& p) {
  validate_problem(p);
  NormResult r;
  switch (p.backend) {
    case Backend::kHardy:
    case Backend::kAnalyticWiener: {
      const auto lambdas = project_sites<Complex>(
          p.sites, [](const Site& s) { return std::get<DiscPoint>(s).value; });
      r = p.backend == Backend::kHardy
              ? hardy::np_norm_hardy(lambdas, p.targets, p.tolerance)
              : seqalg::np_norm_analytic_wiener(lambdas, p.targets, p.tolerance);
      break;
    }
    case Backend::kWiener: {
      const auto thetas = project_sites<double>(
          p.sites, [](const Site& s) { return std::get<CircleAngle>(s).radians; });
      r = seqalg::np_norm_wiener(thetas, p.targets, p.tolerance);
      break;
    }
    case Backend::kL1Torus: {
      const auto ks = project_sites<long long>(
          p.sites, [](const Site& s) { return std::get<IntegerCharacter>(s).k; });
      r = seqalg::np_norm_l1_torus(ks, p.targets, p.tolerance);
      break;
    }
    case Backend::kFiniteSup:
    case Backend::kFiniteL1:
    case Backend::kFiniteLp: {
      const auto subset = project_sites<int>(
          p.sites, [](const Site& s) { return std::get<CoordinateIndex>(s).index; });
      r = finite::np_norm(*p.algebra, subset, p.targets, p.tolerance);
      break;
    }
    default:
      throw Error(ErrorCode::kUnknownBackend, "unknown backend");
  }
  const double floor = sup_lower_bound(p.targets);
  r.lower = std::max(r.lower, std::min(floor, r.upper));
  r.certificate.stats["sup_floor"] = floor;
  return r;
}

}  // namespace picknorm

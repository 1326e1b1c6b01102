#include "picknorm/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "picknorm/error.hpp"
#include "picknorm/jacobi.hpp"

namespace picknorm::hardy {

namespace {

void check_inputs(std::span<const Complex> lambdas, std::span<const Complex> zs) {
  if (lambdas.size() != zs.size()) {
    throw Error(ErrorCode::kLengthMismatch, "lambdas and zs differ in length");
  }
  if (lambdas.empty()) throw Error(ErrorCode::kEmptyTargets, "no interpolation nodes");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(std::abs(lambdas[i]) < 1.0)) {
      throw Error(ErrorCode::kDomainViolation,
                  "lambda " + std::to_string(i) + " is not in the open unit disc");
    }
  }
}

}  // namespace

PickMatrix build_pick_matrix(std::span<const Complex> lambdas, std::span<const Complex> zs,
                             double t) {
  check_inputs(lambdas, zs);
  if (!(t > 0.0)) throw Error(ErrorCode::kNonpositiveLevel, "Pick level must be positive");
  const auto n = static_cast<Eigen::Index>(lambdas.size());
  PickMatrix pm;
  pm.level = t;
  pm.lambdas.assign(lambdas.begin(), lambdas.end());
  pm.zs.assign(zs.begin(), zs.end());
  pm.entries.resize(n, n);
  const double inv_t2 = 1.0 / (t * t);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      const Complex num = 1.0 - inv_t2 * std::conj(zs[uj]) * zs[ui];
      const Complex den = 1.0 - std::conj(lambdas[uj]) * lambdas[ui];
      Complex v = num / den;
      if (i == j) v = Complex(v.real(), 0.0);
      pm.entries(i, j) = v;
      pm.entries(j, i) = std::conj(v);
    }
  }
  return pm;
}

FeasibilityVerdict is_feasible(std::span<const Complex> lambdas, std::span<const Complex> zs,
                               double t, std::optional<double> psd_slack) {
  const PickMatrix pm = build_pick_matrix(lambdas, zs, t);
  FeasibilityVerdict v;
  v.psd_slack = psd_slack.value_or(1e-12 * std::max(1.0, pm.entries.norm()));
  v.min_eigenvalue = linalg::hermitian_eigenvalues(pm.entries).min();
  v.feasible = v.min_eigenvalue >= -v.psd_slack;
  return v;
}

NormResult np_norm_hardy(std::span<const Complex> lambdas, std::span<const Complex> zs,
                         double tolerance) {
  check_inputs(lambdas, zs);
  if (!(tolerance > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  NormResult out;
  out.certificate.kind = "pick_bisection";
  out.certificate.scope = CertificateScope::kExact;
  const double floor = sup_lower_bound(zs);
  if (floor == 0.0) {
    out.certificate.stats["min_eigenvalue_upper"] = 0.0;
    return out;
  }

  auto feasible = [&](double t) { return is_feasible(lambdas, zs, t); };

  double lo = floor;
  double hi = std::max(floor, tolerance);
  const double cap = hi * std::ldexp(1.0, 60);
  FeasibilityVerdict at_hi = feasible(hi);
  int steps = 0;
  while (!at_hi.feasible) {
    lo = hi;
    hi *= 2.0;
    ++steps;
    if (hi > cap) throw Error(ErrorCode::kBracketFailure, "no feasible Pick level below 2^60");
    at_hi = feasible(hi);
  }
  if (hi == floor) {
    // The floor itself is feasible, so the norm equals the floor.
    out.lower = out.upper = floor;
    out.iterations = steps;
    out.certificate.stats["min_eigenvalue_upper"] = at_hi.min_eigenvalue;
    return out;
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const FeasibilityVerdict v = feasible(mid);
    ++steps;
    if (v.feasible) {
      hi = mid;
      at_hi = v;
    } else {
      lo = mid;
    }
  }
  out.lower = lo;
  out.upper = hi;
  out.iterations = steps;
  out.certificate.stats["min_eigenvalue_upper"] = at_hi.min_eigenvalue;
  out.certificate.stats["psd_slack"] = at_hi.psd_slack;
  return out;
}

double pseudohyperbolic(Complex a, Complex b) {
  return std::abs(a - b) / std::abs(1.0 - std::conj(b) * a);
}

}  // namespace picknorm::hardy

#include "picknorm/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "picknorm/error.hpp"
#include "picknorm/finitemodel.hpp"

namespace picknorm {

SiteKind kind_of(const Site& site) noexcept { return static_cast<SiteKind>(site.index()); }

std::string_view to_string(SiteKind kind) noexcept {
  switch (kind) {
    case SiteKind::kDiscPoint: return "disc_point";
    case SiteKind::kCircleAngle: return "circle_angle";
    case SiteKind::kIntegerCharacter: return "integer_character";
    case SiteKind::kCoordinateIndex: return "coordinate_index";
  }
  return "unknown";
}

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::kHardy: return "hardy";
    case Backend::kAnalyticWiener: return "analytic_wiener";
    case Backend::kWiener: return "wiener";
    case Backend::kL1Torus: return "l1_torus";
    case Backend::kFiniteSup: return "finite_sup";
    case Backend::kFiniteL1: return "finite_l1";
    case Backend::kFiniteLp: return "finite_lp";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) noexcept {
  for (Backend b : kAllBackends) {
    if (backend_name(b) == name) return b;
  }
  return std::nullopt;
}

SiteKind site_kind_for(Backend backend) noexcept {
  switch (backend) {
    case Backend::kHardy:
    case Backend::kAnalyticWiener: return SiteKind::kDiscPoint;
    case Backend::kWiener: return SiteKind::kCircleAngle;
    case Backend::kL1Torus: return SiteKind::kIntegerCharacter;
    default: return SiteKind::kCoordinateIndex;
  }
}

bool is_finite_backend(Backend backend) noexcept {
  return backend == Backend::kFiniteSup || backend == Backend::kFiniteL1 ||
         backend == Backend::kFiniteLp;
}

std::string_view to_string(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::kWeightedSup: return "weighted_sup";
    case NormKind::kWeightedL1: return "weighted_l1";
    case NormKind::kLp: return "lp";
  }
  return "unknown";
}

Backend backend_for(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::kWeightedSup: return Backend::kFiniteSup;
    case NormKind::kWeightedL1: return Backend::kFiniteL1;
    case NormKind::kLp: return Backend::kFiniteLp;
  }
  return Backend::kFiniteSup;
}

FiniteAlgebra FiniteAlgebra::sup(std::vector<double> weights,
                                 std::vector<std::vector<Complex>> basis) {
  return FiniteAlgebra{NormKind::kWeightedSup, std::move(weights), 1.0, std::move(basis)};
}

FiniteAlgebra FiniteAlgebra::l1(std::vector<double> weights,
                                std::vector<std::vector<Complex>> basis) {
  return FiniteAlgebra{NormKind::kWeightedL1, std::move(weights), 1.0, std::move(basis)};
}

FiniteAlgebra FiniteAlgebra::lp(std::size_t n, double p,
                                std::vector<std::vector<Complex>> basis) {
  return FiniteAlgebra{NormKind::kLp, std::vector<double>(n, 1.0), p, std::move(basis)};
}

std::string_view to_string(CertificateScope scope) noexcept {
  switch (scope) {
    case CertificateScope::kExact: return "exact";
    case CertificateScope::kTailCertified: return "tail_certified";
    case CertificateScope::kPeriodic: return "periodic";
    case CertificateScope::kGridCertified: return "grid_certified";
    case CertificateScope::kWindowLimited: return "window_limited";
  }
  return "unknown";
}

namespace {

void check_site_domain(const InterpolationProblem& p, std::size_t i) {
  const Site& site = p.sites[i];
  const std::string where = "site " + std::to_string(i);
  if (kind_of(site) != site_kind_for(p.backend)) {
    throw Error(ErrorCode::kDomainViolation,
                where + " has kind " + std::string(to_string(kind_of(site))) + ", backend " +
                    std::string(backend_name(p.backend)) + " expects " +
                    std::string(to_string(site_kind_for(p.backend))));
  }
  switch (p.backend) {
    case Backend::kHardy: {
      const Complex z = std::get<DiscPoint>(site).value;
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) >= 1.0) {
        throw Error(ErrorCode::kDomainViolation, where + " must lie in the open unit disc");
      }
      break;
    }
    case Backend::kAnalyticWiener: {
      const Complex z = std::get<DiscPoint>(site).value;
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1.0) {
        throw Error(ErrorCode::kDomainViolation, where + " must lie in the closed unit disc");
      }
      break;
    }
    case Backend::kWiener: {
      const double theta = std::get<CircleAngle>(site).radians;
      if (!(theta >= 0.0 && theta < 2.0 * std::numbers::pi)) {
        throw Error(ErrorCode::kDomainViolation, where + " angle must lie in [0, 2π)");
      }
      break;
    }
    case Backend::kL1Torus: break;
    default: {
      const int idx = std::get<CoordinateIndex>(site).index;
      const auto n = static_cast<int>(p.algebra->dimension());
      if (idx < 1 || idx > n) {
        throw Error(ErrorCode::kDomainViolation,
                    where + " index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
      }
      break;
    }
  }
}

}  // namespace

void validate_problem(const InterpolationProblem& p) {
  if (p.sites.size() != p.targets.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(p.sites.size()) + " sites but " +
                                                std::to_string(p.targets.size()) + " targets");
  }
  if (p.sites.empty()) throw Error(ErrorCode::kEmptyTargets, "problem has no sites");
  if (!(p.tolerance > 0.0) || !std::isfinite(p.tolerance)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  for (std::size_t i = 0; i < p.targets.size(); ++i) {
    if (!std::isfinite(p.targets[i].real()) || !std::isfinite(p.targets[i].imag())) {
      throw Error(ErrorCode::kInvalidArgument, "target " + std::to_string(i) + " is not finite");
    }
  }
  if (is_finite_backend(p.backend)) {
    if (!p.algebra) {
      throw Error(ErrorCode::kInvalidArgument, "finite backends need an algebra description");
    }
    if (backend_for(p.algebra->norm_kind) != p.backend) {
      throw Error(ErrorCode::kInvalidArgument, "algebra norm kind does not match the backend");
    }
    finite::validate_algebra(*p.algebra);
  }
  for (std::size_t i = 0; i < p.sites.size(); ++i) {
    check_site_domain(p, i);
    for (std::size_t j = 0; j < i; ++j) {
      if (p.sites[i] == p.sites[j]) {
        throw Error(ErrorCode::kDuplicateSite,
                    "site " + std::to_string(i) + " duplicates site " + std::to_string(j));
      }
    }
  }
}

double sup_lower_bound(std::span<const Complex> targets) {
  if (targets.empty()) throw Error(ErrorCode::kEmptyTargets, "no targets");
  double m = 0.0;
  for (const Complex& a : targets) m = std::max(m, std::abs(a));
  return m;
}

}  // namespace picknorm

#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace picknorm {

using Complex = std::complex<double>;

/// Absolute width requested for the norm bracket when a problem does not say.
inline constexpr double kDefaultTolerance = 1e-9;

// ---------------------------------------------------------------------------
// Sites: concrete representations of the multiplicative functionals.

/// Point evaluation at a point of the (closed or open) unit disc.
struct DiscPoint {
  Complex value;
  bool operator==(const DiscPoint&) const = default;
};

/// Point evaluation on the unit circle, angle in radians in [0, 2π).
struct CircleAngle {
  double radians = 0.0;
  bool operator==(const CircleAngle&) const = default;
};

/// The k-th Fourier coefficient functional.
struct IntegerCharacter {
  long long k = 0;
  bool operator==(const IntegerCharacter&) const = default;
};

/// Coordinate functional x ↦ x_index on Cⁿ, index is 1-based.
struct CoordinateIndex {
  int index = 1;
  bool operator==(const CoordinateIndex&) const = default;
};

using Site = std::variant<DiscPoint, CircleAngle, IntegerCharacter, CoordinateIndex>;

enum class SiteKind { kDiscPoint, kCircleAngle, kIntegerCharacter, kCoordinateIndex };

[[nodiscard]] SiteKind kind_of(const Site& site) noexcept;
[[nodiscard]] std::string_view to_string(SiteKind kind) noexcept;

// ---------------------------------------------------------------------------
// Backends.

enum class Backend {
  kHardy,           ///< H^∞ of the disc, sites in the open disc
  kAnalyticWiener,  ///< ℓ1(Z₊), sites in the closed disc
  kWiener,          ///< ℓ1(Z), sites on the circle
  kL1Torus,         ///< L¹(T), sites are integer characters
  kFiniteSup,       ///< Cⁿ with a weighted sup norm
  kFiniteL1,        ///< Cⁿ with a weighted ℓ1 norm
  kFiniteLp,        ///< Cⁿ with an ℓp norm
};

inline constexpr Backend kAllBackends[] = {
    Backend::kHardy,     Backend::kAnalyticWiener, Backend::kWiener,  Backend::kL1Torus,
    Backend::kFiniteSup, Backend::kFiniteL1,       Backend::kFiniteLp};

[[nodiscard]] std::string_view backend_name(Backend backend) noexcept;
[[nodiscard]] std::optional<Backend> parse_backend(std::string_view name) noexcept;
[[nodiscard]] SiteKind site_kind_for(Backend backend) noexcept;
[[nodiscard]] bool is_finite_backend(Backend backend) noexcept;

enum class NormKind { kWeightedSup, kWeightedL1, kLp };

[[nodiscard]] std::string_view to_string(NormKind kind) noexcept;

/// Cⁿ (or a subalgebra of it, spanned by `basis`) under pointwise product,
/// equipped with one of the norms of NormKind. An empty basis means all of Cⁿ.
struct FiniteAlgebra {
  NormKind norm_kind = NormKind::kWeightedSup;
  std::vector<double> weights;
  double p = 1.0;
  std::vector<std::vector<Complex>> basis;

  [[nodiscard]] std::size_t dimension() const noexcept { return weights.size(); }
  [[nodiscard]] bool is_full() const noexcept { return basis.empty(); }

  static FiniteAlgebra sup(std::vector<double> weights, std::vector<std::vector<Complex>> basis = {});
  static FiniteAlgebra l1(std::vector<double> weights, std::vector<std::vector<Complex>> basis = {});
  static FiniteAlgebra lp(std::size_t n, double p, std::vector<std::vector<Complex>> basis = {});
};

[[nodiscard]] Backend backend_for(NormKind kind) noexcept;

struct InterpolationProblem {
  Backend backend = Backend::kHardy;
  std::vector<Site> sites;
  std::vector<Complex> targets;
  double tolerance = kDefaultTolerance;
  /// Required for the finite backends, ignored otherwise.
  std::optional<FiniteAlgebra> algebra;
};

// ---------------------------------------------------------------------------
// Results.

/// One term of a primal interpolant: a Fourier/power index, an angle, or a
/// coordinate, together with its coefficient.
struct Atom {
  double location = 0.0;
  Complex coefficient;
};

/// How far a lower bound reaches.
enum class CertificateScope {
  kExact,          ///< closed form, or a finite dual checked against every constraint
  kTailCertified,  ///< finite window plus a proven geometric tail bound
  kPeriodic,       ///< constraints periodic in k, checked over one full period
  kGridCertified,  ///< sup over a continuum bounded by grid values plus a derivative remainder
  kWindowLimited,  ///< the dual was only evaluated on a finite window (see stats)
};

[[nodiscard]] std::string_view to_string(CertificateScope scope) noexcept;

struct Certificate {
  std::string kind;
  CertificateScope scope = CertificateScope::kExact;
  /// Dual vector b: one entry per constraint row.
  std::vector<Complex> dual;
  double certified_sup = 0.0;
  double dual_bound = 0.0;
  /// Primal interpolant attaining the upper bound (may be empty).
  std::vector<Atom> primal;
  std::map<std::string, double> stats;
};

struct NormResult {
  double lower = 0.0;
  double upper = 0.0;
  Certificate certificate;
  int iterations = 0;

  [[nodiscard]] double gap() const noexcept { return upper - lower; }
};

// ---------------------------------------------------------------------------
// Operations.

/// Throws Error (DuplicateSite, LengthMismatch, DomainViolation, EmptyTargets,
/// InvalidArgument, NotAnAlgebra) when the problem is malformed.
void validate_problem(const InterpolationProblem& problem);

/// max_i |a_i|: every NP norm is at least this (the spectral norm floor).
[[nodiscard]] double sup_lower_bound(std::span<const Complex> targets);

}  // namespace picknorm

#pragma once

#include <span>
#include <vector>

#include "picknorm/problem.hpp"
#include "picknorm/simplex.hpp"

namespace picknorm::lp {

/// A candidate primal atom: an element of the algebra (a monomial, a point
/// mass, a coordinate vector) with its norm weight and its values under the
/// constraint functionals.
struct AtomColumn {
  double location = 0.0;
  double weight = 1.0;
  std::vector<Complex> values;
};

/// Result of scanning the whole atom universe against a dual vector b.
struct Pricing {
  /// sup over the universe of |<b, e_k>| / ω_k as seen by the scan.
  double sup_ratio = 0.0;
  /// A proven upper bound on that sup (≥ sup_ratio); drives the lower bound.
  double certified_sup = 0.0;
  CertificateScope scope = CertificateScope::kExact;
  /// Atoms whose constraint is violated (ratio > 1), most violated first.
  std::vector<AtomColumn> violators;
};

class PricingOracle {
 public:
  virtual ~PricingOracle() = default;
  /// <b, e> is Σ_i conj(b_i)·e_i throughout.
  virtual Pricing price(std::span<const Complex> b) = 0;
};

/// Oracle over an explicitly listed, finite universe.
class ListOracle final : public PricingOracle {
 public:
  explicit ListOracle(std::vector<AtomColumn> atoms, std::size_t max_violators = 64);
  Pricing price(std::span<const Complex> b) override;
  [[nodiscard]] const std::vector<AtomColumn>& atoms() const noexcept { return atoms_; }

 private:
  std::vector<AtomColumn> atoms_;
  std::size_t max_violators_;
};

struct AtomicL1Options {
  /// Each initial atom enters as this many rotated copies e^{iφ}·atom, a
  /// regular polygon approximation of the complex modulus.
  int directions = 64;
  double tolerance = 1e-9;
  int max_rounds = 80;
  SimplexOptions simplex;
};

struct AtomicL1Result {
  bool feasible = false;
  bool converged = false;
  double upper = 0.0;  ///< Σ ω_k |c_k| of the best primal found
  double lower = 0.0;  ///< Re<b, t> / certified_sup of the best dual found
  std::vector<Atom> primal;
  std::vector<Complex> dual;
  double certified_sup = 0.0;
  CertificateScope scope = CertificateScope::kExact;
  double residual = 0.0;  ///< |Σ c_k e_k - t| of the returned primal
  int rounds = 0;
  int pivots = 0;
  std::vector<double> upper_history;
};

/// minimize Σ_k ω_k |c_k|  subject to  Σ_k c_k e_k = t  over complex c.
///
/// Every modulus is linearized by rotated copies of its atom; columns at the
/// exact phase of a violated dual constraint are added on each round (column
/// generation), so the bracket closes without growing a uniform polygon.
/// The dual of the LP gives b with max Re<b,t> s.t. |<b,e_k>| ≤ ω_k, and
/// Re<b,t>/certified_sup is a valid lower bound by weak duality.
[[nodiscard]] AtomicL1Result minimize_atomic_l1(std::span<const Complex> target,
                                                const std::vector<AtomColumn>& initial,
                                                PricingOracle& oracle,
                                                const AtomicL1Options& options = {});

/// Σ_i conj(b_i)·v_i.
[[nodiscard]] Complex pair(std::span<const Complex> b, std::span<const Complex> v) noexcept;

}  // namespace picknorm::lp

#include "picknorm/seqalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "picknorm/atomic_l1.hpp"
#include "picknorm/error.hpp"
#include "picknorm/trig_sup.hpp"

namespace picknorm::seqalg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxDegree = 4096;

double l1_of(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::abs(z);
  return s;
}

double rounding_pad(std::span<const Complex> b) {
  return 8.0 * static_cast<double>(b.size() + 1) * std::numeric_limits<double>::epsilon() *
         l1_of(b);
}

// Selects the top violators (ratio > 1) among a scanned universe.
void collect_violators(std::vector<std::pair<double, std::size_t>>& viol,
                       std::size_t limit, std::vector<std::size_t>& out) {
  std::stable_sort(viol.begin(), viol.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  for (std::size_t i = 0; i < viol.size() && i < limit; ++i) out.push_back(viol[i].second);
}

constexpr double kViolation = 1.0 + 1e-13;
constexpr std::size_t kMaxViolators = 32;

// ---------------------------------------------------------------------------
// ℓ1(Z₊): atoms are the monomials z^k, k = 0..K, with values λ_i^k.

std::vector<std::vector<Complex>> power_table(std::span<const Complex> lambdas, int degree) {
  std::vector<std::vector<Complex>> pw(static_cast<std::size_t>(degree) + 1,
                                       std::vector<Complex>(lambdas.size()));
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    Complex p(1.0, 0.0);
    for (int k = 0; k <= degree; ++k) {
      pw[static_cast<std::size_t>(k)][i] = p;
      p *= lambdas[i];
    }
  }
  return pw;
}

// sup_{k > K} |<b, λ^k>| ≤ Σ_i |b_i|·|λ_i|^{K+1}.
double analytic_tail(std::span<const Complex> lambdas, std::span<const Complex> b, int degree) {
  double t = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    t += std::abs(b[i]) * std::pow(std::abs(lambdas[i]), degree + 1);
  }
  return t;
}

class AnalyticOracle final : public lp::PricingOracle {
 public:
  AnalyticOracle(std::span<const Complex> lambdas, int degree)
      : lambdas_(lambdas), degree_(degree), powers_(power_table(lambdas, degree)) {}

  lp::Pricing price(std::span<const Complex> b) override {
    lp::Pricing out;
    std::vector<std::pair<double, std::size_t>> viol;
    for (std::size_t k = 0; k < powers_.size(); ++k) {
      const double v = std::abs(lp::pair(b, powers_[k]));
      out.sup_ratio = std::max(out.sup_ratio, v);
      if (v > kViolation) viol.emplace_back(v, k);
    }
    last_tail_ = analytic_tail(lambdas_, b, degree_);
    out.certified_sup = std::max(out.sup_ratio, last_tail_) + rounding_pad(b);
    out.scope = CertificateScope::kTailCertified;
    std::vector<std::size_t> ids;
    collect_violators(viol, kMaxViolators, ids);
    for (std::size_t k : ids) out.violators.push_back(atom(k));
    return out;
  }

  lp::AtomColumn atom(std::size_t k) const {
    return {static_cast<double>(k), 1.0, powers_[k]};
  }
  double last_tail() const { return last_tail_; }

 private:
  std::span<const Complex> lambdas_;
  int degree_;
  std::vector<std::vector<Complex>> powers_;
  double last_tail_ = 0.0;
};

NormResult zero_result(std::size_t n, const char* kind) {
  NormResult out;
  out.certificate.kind = kind;
  out.certificate.dual.assign(n, Complex{});
  return out;
}

void fill_from_engine(NormResult& out, const lp::AtomicL1Result& r,
                      std::span<const Complex> targets) {
  const double floor = sup_lower_bound(targets);
  out.upper = r.upper;
  out.lower = std::max(r.lower, floor);
  if (out.lower > out.upper) {
    // Only rounding can cause this; the exhibited primal wins.
    out.lower = out.upper;
  }
  out.iterations = r.rounds;
  out.certificate.dual = r.dual;
  out.certificate.certified_sup = r.certified_sup;
  out.certificate.dual_bound = std::max(r.lower, 0.0);
  out.certificate.scope = r.scope;
  out.certificate.primal = r.primal;
  out.certificate.stats["rounds"] = r.rounds;
  out.certificate.stats["pivots"] = r.pivots;
  out.certificate.stats["primal_residual"] = r.residual;
}

std::string format_bracket(double lo, double hi) {
  std::ostringstream os;
  os.precision(12);
  os << "[" << lo << ", " << hi << "]";
  return os.str();
}

}  // namespace

TruncationPlan plan_analytic_wiener(std::span<const Complex> lambdas, double tail_margin) {
  TruncationPlan plan;
  plan.tail_margin = tail_margin;
  double r = 0.0;
  bool boundary = false;
  for (const Complex& l : lambdas) {
    const double a = std::abs(l);
    if (a >= 1.0) {
      boundary = true;
    } else {
      r = std::max(r, a);
    }
  }
  int k = 0;
  if (r > 0.0) {
    while (k < kMaxDegree && std::pow(r, k + 1) / (1.0 - r) > tail_margin) ++k;
  }
  if (boundary) k = std::max(k, 64);
  plan.degree = std::max(k, 1);
  plan.grid_size = 0;
  return plan;
}

NormResult solve_analytic_wiener(std::span<const Complex> lambdas,
                                 std::span<const Complex> targets, const TruncationPlan& plan,
                                 double tolerance) {
  if (sup_lower_bound(targets) == 0.0) return zero_result(targets.size(), "analytic_wiener_lp");
  AnalyticOracle oracle(lambdas, plan.degree);
  std::vector<lp::AtomColumn> initial;
  const int init = std::min(plan.degree, 2 * static_cast<int>(lambdas.size()) + 2);
  for (int k = 0; k <= init; ++k) initial.push_back(oracle.atom(static_cast<std::size_t>(k)));
  lp::AtomicL1Options opt;
  opt.tolerance = tolerance;
  const lp::AtomicL1Result r = lp::minimize_atomic_l1(targets, initial, oracle, opt);
  if (!r.feasible) {
    throw Error(ErrorCode::kSolverStall,
                "analytic_wiener LP infeasible at degree " + std::to_string(plan.degree));
  }
  NormResult out;
  out.certificate.kind = "analytic_wiener_lp";
  fill_from_engine(out, r, targets);
  out.certificate.stats["degree"] = plan.degree;
  out.certificate.stats["tail_bound"] = analytic_tail(lambdas, r.dual, plan.degree);
  return out;
}

NormResult np_norm_analytic_wiener(std::span<const Complex> lambdas,
                                   std::span<const Complex> targets, double tolerance) {
  if (lambdas.size() != targets.size()) {
    throw Error(ErrorCode::kLengthMismatch, "sites and targets differ in length");
  }
  bool boundary = false;
  for (const Complex& l : lambdas) {
    if (std::abs(l) > 1.0) throw Error(ErrorCode::kDomainViolation, "site outside the closed disc");
    boundary = boundary || std::abs(l) == 1.0;
  }
  TruncationPlan plan = plan_analytic_wiener(lambdas);
  NormResult out;
  for (;;) {
    out = solve_analytic_wiener(lambdas, targets, plan, tolerance);
    if (out.gap() <= tolerance) return out;
    if (plan.degree >= kMaxDegree) break;
    plan.degree = std::min(2 * plan.degree, kMaxDegree);
  }
  if (boundary) {
    throw Error(ErrorCode::kTailBoundFailure,
                "boundary sites: dual tail not certifiable, bracket " +
                    format_bracket(out.lower, out.upper));
  }
  throw Error(ErrorCode::kSolverStall,
              "analytic_wiener bracket " + format_bracket(out.lower, out.upper) +
                  " did not close at degree " + std::to_string(plan.degree));
}

// ---------------------------------------------------------------------------
// ℓ1(Z): atoms are the characters k ∈ Z with values e^{ikθ_j}.

std::optional<RationalAngles> detect_rational_angles(std::span<const double> thetas,
                                                     long long max_period) {
  std::vector<long long> ps(thetas.size()), ns(thetas.size());
  long long period = 1;
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const double x = thetas[j] / kTwoPi;
    bool found = false;
    for (long long n = 1; n <= max_period; ++n) {
      const double y = x * static_cast<double>(n);
      const double p = std::round(y);
      if (std::abs(y - p) <= static_cast<double>(n) * 1e-13) {
        ps[j] = static_cast<long long>(p) % n;
        ns[j] = n;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
    period = std::lcm(period, ns[j]);
    if (period > max_period) return std::nullopt;
  }
  RationalAngles out;
  out.period = period;
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    out.numerators.push_back((ps[j] * (period / ns[j])) % period);
  }
  return out;
}

namespace {

NormResult wiener_periodic(const RationalAngles& ra, std::span<const Complex> targets,
                           double tolerance) {
  const long long n = ra.period;
  const auto& roots = trig::roots_of_unity(static_cast<int>(n));
  std::vector<lp::AtomColumn> universe;
  universe.reserve(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) {
    lp::AtomColumn a;
    a.location = static_cast<double>(k);
    a.weight = 1.0;
    for (long long p : ra.numerators) a.values.push_back(roots[static_cast<std::size_t>((k * p) % n)]);
    universe.push_back(std::move(a));
  }
  const auto init = static_cast<std::size_t>(
      std::min<long long>(n, 4 * static_cast<long long>(targets.size()) + 4));
  std::vector<lp::AtomColumn> initial(universe.begin(), universe.begin() + static_cast<long>(init));
  lp::ListOracle oracle(std::move(universe), kMaxViolators);
  lp::AtomicL1Options opt;
  opt.tolerance = tolerance;
  lp::AtomicL1Result r = lp::minimize_atomic_l1(targets, initial, oracle, opt);
  if (!r.feasible) throw Error(ErrorCode::kSolverStall, "wiener LP infeasible");
  // Constraints are periodic in k, so one period checks all of Z.
  r.scope = CertificateScope::kPeriodic;
  NormResult out;
  out.certificate.kind = "wiener_periodic_lp";
  fill_from_engine(out, r, targets);
  out.certificate.stats["period"] = static_cast<double>(n);
  return out;
}

class WindowOracle final : public lp::PricingOracle {
 public:
  WindowOracle(std::span<const double> thetas, int window) {
    for (int k = -window; k <= window; ++k) {
      lp::AtomColumn a;
      a.location = k;
      for (double t : thetas) a.values.push_back(std::polar(1.0, k * t));
      atoms_.push_back(std::move(a));
    }
  }
  lp::Pricing price(std::span<const Complex> b) override {
    lp::Pricing out;
    std::vector<std::pair<double, std::size_t>> viol;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      const double v = std::abs(lp::pair(b, atoms_[k].values));
      out.sup_ratio = std::max(out.sup_ratio, v);
      if (v > kViolation) viol.emplace_back(v, k);
    }
    out.certified_sup = out.sup_ratio + rounding_pad(b);
    out.scope = CertificateScope::kWindowLimited;
    std::vector<std::size_t> ids;
    collect_violators(viol, kMaxViolators, ids);
    for (std::size_t k : ids) out.violators.push_back(atoms_[k]);
    return out;
  }
  const lp::AtomColumn& atom_at(int k) const {
    return atoms_[static_cast<std::size_t>(k + static_cast<int>(atoms_.size() / 2))];
  }

 private:
  std::vector<lp::AtomColumn> atoms_;
};

}  // namespace

NormResult np_norm_wiener(std::span<const double> thetas, std::span<const Complex> targets,
                          double tolerance) {
  if (thetas.size() != targets.size()) {
    throw Error(ErrorCode::kLengthMismatch, "sites and targets differ in length");
  }
  if (sup_lower_bound(targets) == 0.0) return zero_result(targets.size(), "wiener_lp");
  if (const auto ra = detect_rational_angles(thetas)) {
    NormResult out = wiener_periodic(*ra, targets, tolerance);
    if (out.gap() > tolerance) {
      throw Error(ErrorCode::kSolverStall,
                  "wiener bracket " + format_bracket(out.lower, out.upper) + " did not close");
    }
    return out;
  }

  // Irrational angle ratios: the sup over all k of a dual polynomial has no
  // finite certificate, so only the spectral floor is reported as certified.
  const double floor = sup_lower_bound(targets);
  NormResult out;
  for (int window = 16;; window *= 2) {
    WindowOracle oracle(thetas, window);
    std::vector<lp::AtomColumn> initial;
    const int init = std::min(window, static_cast<int>(targets.size()) + 1);
    for (int k = -init; k <= init; ++k) initial.push_back(oracle.atom_at(k));
    lp::AtomicL1Options opt;
    opt.tolerance = tolerance;
    const lp::AtomicL1Result r = lp::minimize_atomic_l1(targets, initial, oracle, opt);
    if (!r.feasible) throw Error(ErrorCode::kSolverStall, "wiener LP infeasible");
    out = NormResult{};
    out.certificate.kind = "wiener_window_lp";
    fill_from_engine(out, r, targets);
    out.lower = std::min(floor, out.upper);
    out.certificate.scope = CertificateScope::kWindowLimited;
    out.certificate.stats["window"] = window;
    out.certificate.stats["window_lower"] = r.lower;
    if (out.gap() <= tolerance) return out;
    if (window >= kMaxDegree) break;
  }
  throw Error(ErrorCode::kSolverStall,
              "wiener (non-periodic angles) bracket " + format_bracket(out.lower, out.upper) +
                  " did not close by window 4096; window dual estimate " +
                  std::to_string(out.certificate.stats["window_lower"]));
}

// ---------------------------------------------------------------------------
// L¹(T): atoms are point masses δ_φ, with \hat δ_φ(k) = e^{-ikφ}. The dual
// constraint |<b, δ_φ>| = |q(φ)| ≤ 1, q(θ) = Σ b_i e^{i k_i θ}.

namespace {

std::vector<Complex> mass_values(std::span<const long long> ks, double phi) {
  std::vector<Complex> v;
  v.reserve(ks.size());
  for (long long k : ks) v.push_back(std::polar(1.0, -static_cast<double>(k) * phi));
  return v;
}

class TorusOracle final : public lp::PricingOracle {
 public:
  TorusOracle(std::span<const long long> ks, int grid) : ks_(ks), grid_(grid) {}

  lp::Pricing price(std::span<const Complex> b) override {
    trig::TrigPolynomial q{{ks_.begin(), ks_.end()}, {b.begin(), b.end()}};
    const trig::SupCertificate sc = trig::certify_sup(q, grid_, kViolation);
    lp::Pricing out;
    out.sup_ratio = sc.grid_max;
    out.certified_sup = sc.certified_sup;
    out.scope = CertificateScope::kGridCertified;
    for (std::size_t i = 0; i < sc.peaks.size() && i < kMaxViolators; ++i) {
      out.violators.push_back({sc.peaks[i].angle, 1.0, mass_values(ks_, sc.peaks[i].angle)});
    }
    return out;
  }

 private:
  std::span<const long long> ks_;
  int grid_;
};

}  // namespace

NormResult np_norm_l1_torus(std::span<const long long> ks, std::span<const Complex> targets,
                            double tolerance) {
  if (ks.size() != targets.size()) {
    throw Error(ErrorCode::kLengthMismatch, "sites and targets differ in length");
  }
  if (sup_lower_bound(targets) == 0.0) return zero_result(targets.size(), "l1_torus_lp");
  const auto [kmin, kmax] = std::minmax_element(ks.begin(), ks.end());
  const long long spread = *kmax - *kmin;

  double remainder = 0.1 * tolerance;
  NormResult out;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const int grid = trig::grid_for_remainder(spread, remainder, 64, 1 << 20);
    TorusOracle oracle(ks, grid);
    int j = 8;
    while (j < 2 * (spread + 1)) j *= 2;
    std::vector<lp::AtomColumn> initial;
    for (int m = 0; m < j; ++m) {
      const double phi = kTwoPi * m / j;
      initial.push_back({phi, 1.0, mass_values(ks, phi)});
    }
    lp::AtomicL1Options opt;
    opt.tolerance = tolerance;
    opt.directions = j >= 64 ? 16 : 32;
    const lp::AtomicL1Result r = lp::minimize_atomic_l1(targets, initial, oracle, opt);
    if (!r.feasible) throw Error(ErrorCode::kSolverStall, "l1_torus LP infeasible");
    out = NormResult{};
    out.certificate.kind = "l1_torus_measure_lp";
    fill_from_engine(out, r, targets);
    out.certificate.stats["grid"] = grid;
    if (out.gap() <= tolerance) return out;
    remainder *= 0.01;
  }
  throw Error(ErrorCode::kSolverStall,
              "l1_torus bracket " + format_bracket(out.lower, out.upper) + " did not close");
}

// ---------------------------------------------------------------------------

DualCertificate certificate_of(const NormResult& result) {
  DualCertificate c;
  c.b = result.certificate.dual;
  c.certified_sup = result.certificate.certified_sup;
  c.bound = result.certificate.dual_bound;
  return c;
}

namespace {

[[noreturn]] void reject(const std::string& where, double found, double claimed) {
  std::ostringstream os;
  os.precision(15);
  os << "dual constraint violated at " << where << ": sup " << found << " exceeds claimed "
     << claimed;
  throw Error(ErrorCode::kCertificateRejected, os.str());
}

}  // namespace

double dual_certificate_check(const DualCertificate& cert, const InterpolationProblem& problem) {
  const std::size_t n = problem.targets.size();
  if (cert.b.size() != n) {
    throw Error(ErrorCode::kLengthMismatch, "certificate length differs from the site count");
  }
  if (!(cert.certified_sup > 0.0)) {
    throw Error(ErrorCode::kCertificateRejected, "certified_sup must be positive");
  }
  const double claimed = cert.certified_sup * (1.0 + 1e-12);
  double sup = 0.0;
  switch (problem.backend) {
    case Backend::kL1Torus: {
      trig::TrigPolynomial q;
      for (const Site& s : problem.sites) q.freqs.push_back(std::get<IntegerCharacter>(s).k);
      q.coeffs = cert.b;
      const int grid = trig::grid_for_remainder(q.spread(), 1e-15, 256, 1 << 22);
      const trig::SupCertificate sc = trig::certify_sup(q, grid, claimed);
      sup = sc.certified_sup;
      if (!sc.peaks.empty()) {
        reject("angle " + std::to_string(sc.peaks.front().angle), sc.peaks.front().modulus,
               cert.certified_sup);
      }
      break;
    }
    case Backend::kAnalyticWiener: {
      std::vector<Complex> lambdas;
      for (const Site& s : problem.sites) lambdas.push_back(std::get<DiscPoint>(s).value);
      const int degree = std::min(2 * plan_analytic_wiener(lambdas, 1e-15).degree, 2 * kMaxDegree);
      const auto pw = power_table(lambdas, degree);
      for (std::size_t k = 0; k < pw.size(); ++k) {
        const double v = std::abs(lp::pair(cert.b, pw[k]));
        if (v > claimed) reject("frequency " + std::to_string(k), v, cert.certified_sup);
        sup = std::max(sup, v);
      }
      const double tail = analytic_tail(lambdas, cert.b, degree);
      if (tail > claimed) {
        reject("tail k > " + std::to_string(degree), tail, cert.certified_sup);
      }
      sup = std::max(sup, tail) + rounding_pad(cert.b);
      break;
    }
    case Backend::kWiener: {
      std::vector<double> thetas;
      for (const Site& s : problem.sites) thetas.push_back(std::get<CircleAngle>(s).radians);
      long long lo = -2 * kMaxDegree;
      long long hi = 2 * kMaxDegree;
      if (const auto ra = detect_rational_angles(thetas)) {
        lo = 0;
        hi = ra->period - 1;
      }
      for (long long k = lo; k <= hi; ++k) {
        Complex s{};
        for (std::size_t j = 0; j < n; ++j) {
          s += std::conj(cert.b[j]) * std::polar(1.0, static_cast<double>(k) * thetas[j]);
        }
        const double v = std::abs(s);
        if (v > claimed) reject("frequency " + std::to_string(k), v, cert.certified_sup);
        sup = std::max(sup, v);
      }
      sup += rounding_pad(cert.b);
      break;
    }
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "dual certificates are checked for the sequence backends only");
  }
  // A recheck sup below the claim only helps; the claim stays the binding one.
  const double used = std::max(sup, cert.certified_sup);
  const double bound = lp::pair(cert.b, problem.targets).real() / used;
  if (bound < cert.bound - 1e-12) {
    std::ostringstream os;
    os.precision(15);
    os << "recomputed bound " << bound << " is below the claimed " << cert.bound;
    throw Error(ErrorCode::kCertificateRejected, os.str());
  }
  return bound;
}

}  // namespace picknorm::seqalg

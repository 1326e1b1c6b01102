#include "picknorm/finitemodel.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "picknorm/atomic_l1.hpp"
#include "picknorm/dense.hpp"
#include "picknorm/error.hpp"

namespace picknorm::finite {

namespace {

constexpr double kClosureTol = 1e-12;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

Eigen::MatrixXcd basis_matrix(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dimension();
  if (alg.is_full()) return Eigen::MatrixXcd::Identity(idx(n), idx(n));
  return linalg::columns_of(alg.basis, n);
}

double closure_defect(const FiniteAlgebra& alg) {
  if (alg.is_full()) return 0.0;
  const std::size_t n = alg.dimension();
  const Eigen::MatrixXcd q = linalg::orth(basis_matrix(alg));
  double worst = 0.0;
  for (std::size_t i = 0; i < alg.basis.size(); ++i) {
    for (std::size_t j = i; j < alg.basis.size(); ++j) {
      Eigen::VectorXcd prod(idx(n));
      for (std::size_t k = 0; k < n; ++k) prod(idx(k)) = alg.basis[i][k] * alg.basis[j][k];
      const Eigen::VectorXcd resid = prod - q * (q.adjoint() * prod);
      worst = std::max(worst, resid.norm() / std::max(1.0, prod.norm()));
    }
  }
  return worst;
}

void validate_algebra(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dimension();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "algebra dimension must be at least 1");
  for (std::size_t i = 0; i < n; ++i) {
    const double w = alg.weights[i];
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidArgument, "weight " + std::to_string(i) + " is not finite");
    }
    if (alg.norm_kind == NormKind::kLp) {
      if (w != 1.0) throw Error(ErrorCode::kInvalidArgument, "lp norms take unit weights");
    } else if (w < 1.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weight " + std::to_string(i) + " is below 1; the norm would not be submultiplicative");
    }
  }
  if (alg.norm_kind == NormKind::kLp && !(alg.p >= 1.0 && std::isfinite(alg.p))) {
    throw Error(ErrorCode::kInvalidArgument, "lp exponent must be a finite p ≥ 1");
  }
  for (std::size_t j = 0; j < alg.basis.size(); ++j) {
    if (alg.basis[j].size() != n) {
      throw Error(ErrorCode::kLengthMismatch,
                  "basis vector " + std::to_string(j) + " has length " +
                      std::to_string(alg.basis[j].size()) + ", expected " + std::to_string(n));
    }
    for (const Complex& c : alg.basis[j]) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw Error(ErrorCode::kInvalidArgument, "basis vector " + std::to_string(j) + " is not finite");
      }
    }
  }
  if (!alg.is_full() && linalg::orth(basis_matrix(alg)).cols() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "basis spans the zero subspace");
  }
  const double defect = closure_defect(alg);
  if (defect > kClosureTol) {
    throw Error(ErrorCode::kNotAnAlgebra,
                "basis span is not closed under pointwise products (residual " +
                    std::to_string(defect) + ")");
  }
}

NormSpec norm_of(const FiniteAlgebra& alg) { return {alg.norm_kind, alg.weights, alg.p}; }

NormSpec dual_norm(const NormSpec& spec) {
  NormSpec d = spec;
  switch (spec.kind) {
    case NormKind::kWeightedSup:
      d.kind = NormKind::kWeightedL1;
      for (double& w : d.weights) w = 1.0 / w;
      break;
    case NormKind::kWeightedL1:
      d.kind = NormKind::kWeightedSup;
      for (double& w : d.weights) w = 1.0 / w;
      break;
    case NormKind::kLp:
      if (spec.p == 1.0) {
        d.kind = NormKind::kWeightedSup;
        d.p = 1.0;
      } else {
        d.p = spec.p / (spec.p - 1.0);
      }
      break;
  }
  return d;
}

double evaluate(const NormSpec& spec, std::span<const Complex> x) {
  double s = 0.0;
  switch (spec.kind) {
    case NormKind::kWeightedSup:
      for (std::size_t i = 0; i < x.size(); ++i) s = std::max(s, spec.weights[i] * std::abs(x[i]));
      return s;
    case NormKind::kWeightedL1:
      for (std::size_t i = 0; i < x.size(); ++i) s += spec.weights[i] * std::abs(x[i]);
      return s;
    case NormKind::kLp: {
      double m = 0.0;
      for (const Complex& c : x) m = std::max(m, std::abs(c));
      if (m == 0.0) return 0.0;
      for (const Complex& c : x) s += std::pow(std::abs(c) / m, spec.p);
      return m * std::pow(s, 1.0 / spec.p);
    }
  }
  return s;
}

double algebra_norm(const FiniteAlgebra& alg, std::span<const Complex> x) {
  return evaluate(norm_of(alg), x);
}

namespace {

double evaluate(const NormSpec& spec, const Eigen::VectorXcd& x) {
  return evaluate(spec, std::span<const Complex>(x.data(), static_cast<std::size_t>(x.size())));
}

std::vector<Atom> as_atoms(const Eigen::VectorXcd& x) {
  std::vector<Atom> out;
  for (Eigen::Index k = 0; k < x.size(); ++k) out.push_back({static_cast<double>(k + 1), x(k)});
  return out;
}

NormResult exact_result(const NormSpec& spec, const Eigen::VectorXcd& x, const char* kind) {
  NormResult out;
  out.lower = out.upper = evaluate(spec, x);
  out.certificate.kind = kind;
  out.certificate.scope = CertificateScope::kExact;
  out.certificate.primal = as_atoms(x);
  return out;
}

// min max_k w_k|x_k| over the coset, through its dual
//   1/NP = min Σ|y_k|/w_k  s.t.  y ⟂ z,  <y, x0> = 1.
NormResult sup_coset(const NormSpec& spec, const Eigen::VectorXcd& x0, const Eigen::MatrixXcd& z,
                     double tolerance) {
  const Eigen::Index n = x0.size();
  const Eigen::Index m = z.cols();
  std::vector<lp::AtomColumn> atoms;
  Eigen::MatrixXcd c(m + 1, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    lp::AtomColumn a;
    a.location = static_cast<double>(k + 1);
    a.weight = 1.0 / spec.weights[static_cast<std::size_t>(k)];
    for (Eigen::Index j = 0; j < m; ++j) a.values.push_back(std::conj(z(k, j)));
    a.values.push_back(std::conj(x0(k)));
    for (Eigen::Index j = 0; j <= m; ++j) c(j, k) = a.values[static_cast<std::size_t>(j)];
    atoms.push_back(std::move(a));
  }
  std::vector<Complex> target(static_cast<std::size_t>(m + 1), Complex{});
  target.back() = 1.0;

  const double naive = evaluate(spec, x0);
  lp::AtomicL1Options opt;
  opt.tolerance = std::max(1e-15, 0.5 * tolerance / (naive * naive));
  lp::ListOracle oracle(atoms);
  const lp::AtomicL1Result r = lp::minimize_atomic_l1(target, atoms, oracle, opt);
  if (!r.feasible) throw Error(ErrorCode::kSolverStall, "sup coset dual LP infeasible");

  NormResult out;
  out.certificate.kind = "finite_sup_dual_lp";
  out.certificate.scope = CertificateScope::kExact;
  out.iterations = r.rounds;

  // Lower bound from the dual vector y, pushed back onto its constraints.
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
  for (const Atom& a : r.primal) y(static_cast<Eigen::Index>(a.location) - 1) = a.coefficient;
  const Eigen::VectorXcd t = linalg::to_eigen(target);
  y -= linalg::least_squares(c, c * y - t).x;
  double ymass = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) ymass += std::abs(y(k)) / spec.weights[static_cast<std::size_t>(k)];
  const double lower = ymass > 0.0 ? std::abs((c.row(m) * y)(0)) / ymass : 0.0;

  // Upper bound from the LP multipliers b: x = x0 + z·b_head/b_m.
  Eigen::VectorXcd best = x0;
  double upper = naive;
  if (r.dual.size() == static_cast<std::size_t>(m + 1) && std::abs(r.dual.back()) > 0.0) {
    Eigen::VectorXcd head(m);
    for (Eigen::Index j = 0; j < m; ++j) head(j) = r.dual[static_cast<std::size_t>(j)];
    const Eigen::VectorXcd x = x0 + z * (head / r.dual.back());
    const double v = evaluate(spec, x);
    if (v < upper) {
      upper = v;
      best = x;
    }
  }
  out.upper = upper;
  out.lower = std::min(lower, upper);
  out.certificate.primal = as_atoms(best);
  out.certificate.dual = linalg::to_std(y);
  out.certificate.dual_bound = lower;
  out.certificate.certified_sup = 1.0;
  out.certificate.stats["dual_lp_rounds"] = r.rounds;
  return out;
}

NormResult l1_coset(const NormSpec& spec, const Eigen::VectorXcd& x0, const Eigen::MatrixXcd& z,
                    double tolerance) {
  const Eigen::Index n = x0.size();
  const Eigen::MatrixXcd nmat = linalg::null_space(z.adjoint());
  const Eigen::MatrixXcd c = nmat.adjoint();
  std::vector<lp::AtomColumn> atoms;
  for (Eigen::Index k = 0; k < n; ++k) {
    lp::AtomColumn a;
    a.location = static_cast<double>(k + 1);
    a.weight = spec.kind == NormKind::kLp ? 1.0 : spec.weights[static_cast<std::size_t>(k)];
    for (Eigen::Index j = 0; j < c.rows(); ++j) a.values.push_back(c(j, k));
    atoms.push_back(std::move(a));
  }
  const std::vector<Complex> target = linalg::to_std(c * x0);
  lp::AtomicL1Options opt;
  opt.tolerance = tolerance;
  lp::ListOracle oracle(atoms);
  const lp::AtomicL1Result r = lp::minimize_atomic_l1(target, atoms, oracle, opt);
  if (!r.feasible) throw Error(ErrorCode::kSolverStall, "l1 coset LP infeasible");

  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
  for (const Atom& a : r.primal) x(static_cast<Eigen::Index>(a.location) - 1) = a.coefficient;
  if (z.cols() > 0) x = x0 + z * (z.adjoint() * (x - x0));
  else x = x0;
  NormSpec l1 = spec;
  if (spec.kind == NormKind::kLp) {
    l1.kind = NormKind::kWeightedL1;
    l1.weights.assign(static_cast<std::size_t>(n), 1.0);
  }
  NormResult out;
  out.certificate.kind = "finite_l1_lp";
  out.certificate.scope = CertificateScope::kExact;
  out.iterations = r.rounds;
  out.upper = std::min(evaluate(l1, x), evaluate(l1, x0));
  if (evaluate(l1, x0) < evaluate(l1, x)) x = x0;
  out.lower = std::min(r.lower, out.upper);
  out.certificate.primal = as_atoms(x);
  out.certificate.dual = r.dual;
  out.certificate.certified_sup = r.certified_sup;
  out.certificate.dual_bound = r.lower;
  return out;
}

// ℓp, p > 1: Newton on the smoothed objective Σ(|x_k|² + ε²)^{p/2} over the
// real coordinates of β (x = x0 + zβ), with ε driven down in stages. The
// lower bound is Hölder applied to the gradient direction projected onto
// the annihilator of z.
NormResult lp_coset(double p, const Eigen::VectorXcd& x0, const Eigen::MatrixXcd& z) {
  const Eigen::Index n = x0.size();
  const Eigen::Index m = z.cols();
  const Eigen::Index dim = 2 * m;
  Eigen::MatrixXd jac(2 * n, dim);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < m; ++j) {
      jac(2 * k, 2 * j) = z(k, j).real();
      jac(2 * k + 1, 2 * j) = z(k, j).imag();
      jac(2 * k, 2 * j + 1) = -z(k, j).imag();
      jac(2 * k + 1, 2 * j + 1) = z(k, j).real();
    }
  }
  auto point = [&](const Eigen::VectorXd& beta) {
    Eigen::VectorXcd b(m);
    for (Eigen::Index j = 0; j < m; ++j) b(j) = Complex(beta(2 * j), beta(2 * j + 1));
    return Eigen::VectorXcd(x0 + z * b);
  };
  double scale = x0.cwiseAbs().maxCoeff();
  auto objective = [&](const Eigen::VectorXcd& x, double eps) {
    double f = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      f += std::pow((std::norm(x(k)) + eps * eps) / (scale * scale), p / 2.0);
    }
    return f;
  };

  Eigen::VectorXd beta(dim);
  {
    const Eigen::VectorXcd b0 = -(z.adjoint() * x0);
    for (Eigen::Index j = 0; j < m; ++j) {
      beta(2 * j) = b0(j).real();
      beta(2 * j + 1) = b0(j).imag();
    }
  }
  int iterations = 0;
  double eps = 0.1 * scale;
  for (int stage = 0; stage < 14; ++stage, eps *= 0.1) {
    for (int it = 0; it < 80; ++it) {
      ++iterations;
      const Eigen::VectorXcd x = point(beta);
      Eigen::VectorXd grad_r(2 * n);
      Eigen::MatrixXd hess_r = Eigen::MatrixXd::Zero(2 * n, 2 * n);
      for (Eigen::Index k = 0; k < n; ++k) {
        const double re = x(k).real() / scale;
        const double im = x(k).imag() / scale;
        const double s = re * re + im * im + (eps / scale) * (eps / scale);
        const double d1 = (p / 2.0) * std::pow(s, p / 2.0 - 1.0);
        const double d2 = (p / 2.0) * (p / 2.0 - 1.0) * std::pow(s, p / 2.0 - 2.0);
        grad_r(2 * k) = 2.0 * d1 * re;
        grad_r(2 * k + 1) = 2.0 * d1 * im;
        hess_r(2 * k, 2 * k) = 2.0 * d1 + 4.0 * d2 * re * re;
        hess_r(2 * k + 1, 2 * k + 1) = 2.0 * d1 + 4.0 * d2 * im * im;
        hess_r(2 * k, 2 * k + 1) = hess_r(2 * k + 1, 2 * k) = 4.0 * d2 * re * im;
      }
      // Derivatives with respect to β/scale.
      const Eigen::VectorXd g = jac.transpose() * grad_r;
      Eigen::MatrixXd h = jac.transpose() * hess_r * jac;
      const double f0 = objective(x, eps);
      Eigen::VectorXd step;
      double damping = 0.0;
      for (int tries = 0; tries < 30; ++tries) {
        Eigen::MatrixXd hd = h;
        hd.diagonal().array() += damping;
        Eigen::LDLT<Eigen::MatrixXd> ldlt(hd);
        step = -ldlt.solve(g);
        if (ldlt.info() == Eigen::Success && step.allFinite() && g.dot(step) < 0.0) break;
        damping = damping == 0.0 ? 1e-12 * std::max(1.0, h.diagonal().cwiseAbs().maxCoeff())
                                 : damping * 10.0;
      }
      const double decrement = -g.dot(step);
      if (!(decrement > 1e-30 * std::max(1.0, f0))) break;
      double t = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
        const Eigen::VectorXd trial = beta + t * scale * step;
        if (objective(point(trial), eps) <= f0 - 1e-4 * t * decrement) {
          beta = trial;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
  }

  const Eigen::VectorXcd x = point(beta);
  NormSpec spec{NormKind::kLp, std::vector<double>(static_cast<std::size_t>(n), 1.0), p};
  // Dual direction: y_k ∝ (|x_k|² + ε²)^{p/2-1}·conj(x_k), made exactly
  // orthogonal to z under the bilinear pairing.
  Eigen::VectorXcd y(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double s = std::norm(x(k) / scale) + (eps / scale) * (eps / scale);
    y(k) = std::pow(s, p / 2.0 - 1.0) * std::conj(x(k) / scale);
  }
  y -= z.conjugate() * (z.transpose() * y);
  const NormSpec qspec = dual_norm(spec);
  const double ynorm = evaluate(qspec, y);
  const double lower = ynorm > 0.0 ? std::abs((y.transpose() * x0)(0)) / ynorm : 0.0;

  NormResult out;
  out.certificate.kind = "finite_lp_newton";
  out.certificate.scope = CertificateScope::kExact;
  out.upper = evaluate(spec, x);
  out.lower = std::min(lower, out.upper);
  out.iterations = iterations;
  out.certificate.primal = as_atoms(x);
  out.certificate.dual = linalg::to_std(y);
  out.certificate.dual_bound = lower;
  out.certificate.certified_sup = ynorm;
  return out;
}

}  // namespace

NormResult minimize_over_coset(const NormSpec& spec, const Eigen::VectorXcd& x0,
                               const Eigen::MatrixXcd& z, double tolerance) {
  if (x0.cwiseAbs().maxCoeff() == 0.0) return exact_result(spec, x0, "zero_coset");
  if (z.cols() == 0) return exact_result(spec, x0, "single_point_coset");
  switch (spec.kind) {
    case NormKind::kWeightedSup: return sup_coset(spec, x0, z, tolerance);
    case NormKind::kWeightedL1: return l1_coset(spec, x0, z, tolerance);
    case NormKind::kLp:
      if (spec.p == 1.0) return l1_coset(spec, x0, z, tolerance);
      return lp_coset(spec.p, x0, z);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown norm kind");
}

namespace {

void check_subset(const FiniteAlgebra& alg, std::span<const int> subset,
                  std::span<const Complex> targets) {
  if (subset.size() != targets.size()) {
    throw Error(ErrorCode::kLengthMismatch, "subset and targets differ in length");
  }
  if (subset.empty()) throw Error(ErrorCode::kEmptyTargets, "empty site subset");
  const auto n = static_cast<int>(alg.dimension());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > n) {
      throw Error(ErrorCode::kDomainViolation, "coordinate " + std::to_string(subset[i]) +
                                                   " outside 1.." + std::to_string(n));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (subset[i] == subset[j]) {
        throw Error(ErrorCode::kDuplicateSite,
                    "site " + std::to_string(i) + " duplicates site " + std::to_string(j));
      }
    }
  }
}

}  // namespace

NormResult np_norm_closed_form(const FiniteAlgebra& alg, std::span<const int> subset,
                               std::span<const Complex> targets) {
  if (!alg.is_full()) {
    throw Error(ErrorCode::kUnsupportedForSubalgebra,
                "closed forms only cover the full algebra Cⁿ");
  }
  check_subset(alg, subset, targets);
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(idx(alg.dimension()));
  for (std::size_t i = 0; i < subset.size(); ++i) x(subset[i] - 1) = targets[i];
  // Free coordinates set to zero; no other extension has a smaller norm
  // since every norm here is monotone in each |x_k|.
  return exact_result(norm_of(alg), x, "closed_form");
}

NormResult np_norm_generic(const FiniteAlgebra& alg, std::span<const int> subset,
                           std::span<const Complex> targets, double tolerance) {
  check_subset(alg, subset, targets);
  const Eigen::MatrixXcd v = basis_matrix(alg);
  Eigen::MatrixXcd vs(idx(subset.size()), v.cols());
  for (std::size_t i = 0; i < subset.size(); ++i) vs.row(idx(i)) = v.row(subset[i] - 1);
  const Eigen::VectorXcd a = linalg::to_eigen(targets);
  const linalg::LeastSquaresSolution ls = linalg::least_squares(vs, a);
  const double amax = a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
  if (ls.residual > 1e-9 * std::max(1.0, amax)) {
    throw Error(ErrorCode::kInfeasibleCoset,
                "no element of the algebra takes these targets (residual " +
                    std::to_string(ls.residual) + ")");
  }
  const Eigen::VectorXcd x0 = v * ls.x;
  const Eigen::MatrixXcd z = linalg::orth(v * linalg::null_space(vs));
  NormResult out = minimize_over_coset(norm_of(alg), x0, z, tolerance);
  out.lower = std::max(out.lower, std::min(sup_lower_bound(targets), out.upper));
  out.certificate.stats["coset_dimension"] = static_cast<double>(z.cols());
  if (out.gap() > tolerance) {
    throw Error(ErrorCode::kSolverStall,
                "finite coset bracket [" + std::to_string(out.lower) + ", " +
                    std::to_string(out.upper) + "] wider than the tolerance");
  }
  return out;
}

NormResult np_norm(const FiniteAlgebra& alg, std::span<const int> subset,
                   std::span<const Complex> targets, double tolerance) {
  if (alg.is_full()) return np_norm_closed_form(alg, subset, targets);
  return np_norm_generic(alg, subset, targets, tolerance);
}

// ---------------------------------------------------------------------------

NPInftyVerdict np_infty_test(const FiniteAlgebra& alg, int sample_budget, std::uint64_t seed,
                             double tolerance) {
  NPInftyVerdict verdict;
  verdict.exact = alg.is_full();
  const auto n = static_cast<int>(alg.dimension());
  const int kmax = std::min(n, 4);

  std::vector<std::vector<int>> subsets;
  for (int size = 1; size <= kmax; ++size) {
    std::vector<int> s(static_cast<std::size_t>(size));
    std::iota(s.begin(), s.end(), 1);
    for (;;) {
      subsets.push_back(s);
      int i = size - 1;
      while (i >= 0 && s[static_cast<std::size_t>(i)] == n - size + i + 1) --i;
      if (i < 0) break;
      ++s[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  auto check = [&](const std::vector<int>& subset, const std::vector<Complex>& targets) {
    const double sup = sup_lower_bound(targets);
    NormResult r;
    try {
      r = np_norm(alg, subset, targets, tolerance);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInfeasibleCoset) return false;
      throw;
    }
    ++verdict.problems_checked;
    verdict.worst_gap = std::max(verdict.worst_gap, r.lower - sup);
    if (r.lower > sup + tolerance) {
      verdict.is_np_infty = false;
      verdict.witness = NPInftyWitness{subset, targets, r.lower, r.upper, sup};
      return true;
    }
    return false;
  };

  for (const auto& subset : subsets) {
    const std::size_t k = subset.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<Complex> t(k);
      for (std::size_t i = 0; i < k; ++i) t[i] = (mask >> i) & 1U ? -1.0 : 1.0;
      if (check(subset, t)) return verdict;
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Complex> t(k, Complex{});
      t[j] = 1.0;
      if (check(subset, t)) return verdict;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int s = 0; s < sample_budget; ++s) {
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(kmax));
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < size; ++i) {
      const auto j = static_cast<std::size_t>(i) +
                     static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<int> subset(pool.begin(), pool.begin() + size);
    std::sort(subset.begin(), subset.end());
    std::vector<Complex> t(static_cast<std::size_t>(size));
    for (Complex& c : t) {
      const double re = unit(rng);
      const double im = unit(rng);
      c = Complex(re, im);
    }
    if (sup_lower_bound(t) == 0.0) continue;
    if (check(subset, t)) return verdict;
  }
  return verdict;
}

std::optional<std::vector<Complex>> annihilating_functional(
    const std::vector<std::vector<Complex>>& basis, std::size_t n) {
  if (basis.empty()) return std::nullopt;
  const Eigen::MatrixXcd v = linalg::columns_of(basis, n);
  const Eigen::MatrixXcd ann = linalg::null_space(v.transpose());
  if (ann.cols() == 0) return std::nullopt;
  Eigen::VectorXcd mu = ann.col(0);
  const double mass = mu.cwiseAbs().sum();
  mu /= mass;
  const double cut = 1e-12;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    if (std::abs(mu(i)) > cut) {
      mu *= std::conj(mu(i)) / std::abs(mu(i));
      mu(i) = Complex(mu(i).real(), 0.0);
      break;
    }
  }
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    if (std::abs(mu(i)) <= cut * 1e-3) mu(i) = 0.0;
  }
  return linalg::to_std(mu);
}

std::string_view to_string(ScatteredBranch branch) noexcept {
  switch (branch) {
    case ScatteredBranch::kDense: return "dense: no contradiction to seek";
    case ScatteredBranch::kInterpolationImpossible:
      return "interpolation impossible in proper subalgebra";
    case ScatteredBranch::kNormExceedsTwo: return "every interpolant has norm above 2";
    case ScatteredBranch::kNormAtMostTwo: return "interpolant of norm at most 2 found";
  }
  return "unknown";
}

ScatteredReport scattered_contradiction_check(const FiniteAlgebra& alg, double tolerance) {
  ScatteredReport rep;
  const std::size_t n = alg.dimension();
  rep.closed_under_products = closure_defect(alg) <= kClosureTol;
  const auto mu = alg.is_full() ? std::nullopt : annihilating_functional(alg.basis, n);
  if (!mu) {
    rep.branch = ScatteredBranch::kDense;
    rep.message = std::string(to_string(rep.branch));
    return rep;
  }
  rep.mu = *mu;
  rep.order.resize(n);
  std::iota(rep.order.begin(), rep.order.end(), 1);
  std::stable_sort(rep.order.begin(), rep.order.end(), [&](int a, int b) {
    return std::abs(rep.mu[static_cast<std::size_t>(a - 1)]) >
           std::abs(rep.mu[static_cast<std::size_t>(b - 1)]);
  });
  double total = 0.0;
  for (const Complex& c : rep.mu) total += std::abs(c);
  double head = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const int c = rep.order[i];
    const Complex m = rep.mu[static_cast<std::size_t>(c - 1)];
    if (std::abs(m) == 0.0) break;
    head += std::abs(m);
    rep.subset.push_back(c);
    rep.sign_targets.push_back(std::conj(m) / std::abs(m));
    if (head > (2.0 / 3.0) * total) break;
  }
  rep.n0 = static_cast<int>(rep.subset.size());
  rep.head_mass = head;
  rep.tail_mass = std::max(0.0, total - head);
  rep.implied_norm_lower = rep.tail_mass > 0.0 ? head / rep.tail_mass
                                                : std::numeric_limits<double>::infinity();

  try {
    rep.np = np_norm_generic(alg, rep.subset, rep.sign_targets, tolerance);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasibleCoset) throw;
    rep.branch = ScatteredBranch::kInterpolationImpossible;
    rep.message = std::string(to_string(rep.branch)) + ": " + e.what();
    return rep;
  }
  Complex pairing{};
  double xsup = 0.0;
  for (const Atom& a : rep.np->certificate.primal) {
    const auto k = static_cast<std::size_t>(a.location) - 1;
    pairing += a.coefficient * rep.mu[k];
    xsup = std::max(xsup, std::abs(a.coefficient));
  }
  rep.pairing = std::abs(pairing);
  rep.chain_lower = head - xsup * rep.tail_mass;
  rep.branch = rep.np->upper <= 2.0 ? ScatteredBranch::kNormAtMostTwo
                                    : ScatteredBranch::kNormExceedsTwo;
  rep.message = std::string(to_string(rep.branch));
  return rep;
}

}  // namespace picknorm::finite

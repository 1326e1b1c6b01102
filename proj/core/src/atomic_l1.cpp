#include "picknorm/atomic_l1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "picknorm/dense.hpp"

namespace picknorm::lp {

Complex pair(std::span<const Complex> b, std::span<const Complex> v) noexcept {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < b.size(); ++i) s += std::conj(b[i]) * v[i];
  return s;
}

ListOracle::ListOracle(std::vector<AtomColumn> atoms, std::size_t max_violators)
    : atoms_(std::move(atoms)), max_violators_(max_violators) {}

Pricing ListOracle::price(std::span<const Complex> b) {
  Pricing out;
  std::vector<std::pair<double, std::size_t>> viol;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    const double ratio = std::abs(pair(b, atoms_[k].values)) / atoms_[k].weight;
    out.sup_ratio = std::max(out.sup_ratio, ratio);
    if (ratio > 1.0 + 1e-13) viol.emplace_back(ratio, k);
  }
  out.certified_sup = out.sup_ratio;
  std::stable_sort(viol.begin(), viol.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  for (std::size_t i = 0; i < viol.size() && i < max_violators_; ++i) {
    out.violators.push_back(atoms_[viol[i].second]);
  }
  return out;
}

namespace {

struct Column {
  std::size_t atom = 0;
  double phase = 0.0;
};

class ColumnPool {
 public:
  std::size_t atom_id(const AtomColumn& a) {
    auto it = ids_.find(a.location);
    if (it != ids_.end()) return it->second;
    atoms_.push_back(a);
    ids_.emplace(a.location, atoms_.size() - 1);
    return atoms_.size() - 1;
  }

  bool add(std::size_t atom, double phase) {
    for (const Column& c : columns_) {
      if (c.atom != atom) continue;
      double d = std::remainder(c.phase - phase, 2.0 * std::numbers::pi);
      if (std::abs(d) < 1e-12) return false;
    }
    columns_.push_back({atom, phase});
    return true;
  }

  LinearProgram build(std::span<const Complex> target) const {
    const auto rows = static_cast<Eigen::Index>(2 * target.size());
    const auto cols = static_cast<Eigen::Index>(columns_.size());
    LinearProgram lp;
    lp.a.resize(rows, cols);
    lp.b.resize(rows);
    lp.c.resize(cols);
    for (std::size_t i = 0; i < target.size(); ++i) {
      lp.b(static_cast<Eigen::Index>(2 * i)) = target[i].real();
      lp.b(static_cast<Eigen::Index>(2 * i + 1)) = target[i].imag();
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Column& col = columns_[static_cast<std::size_t>(j)];
      const AtomColumn& atom = atoms_[col.atom];
      const Complex rot = std::polar(1.0, col.phase);
      lp.c(j) = atom.weight;
      for (std::size_t i = 0; i < target.size(); ++i) {
        const Complex z = rot * atom.values[i];
        lp.a(static_cast<Eigen::Index>(2 * i), j) = z.real();
        lp.a(static_cast<Eigen::Index>(2 * i + 1), j) = z.imag();
      }
    }
    return lp;
  }

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<AtomColumn>& atoms() const { return atoms_; }

 private:
  std::vector<AtomColumn> atoms_;
  std::map<double, std::size_t> ids_;
  std::vector<Column> columns_;
};

// Smallest change to b making every atom in the primal support tight at the
// phase the primal uses: <b, e_k> = ω_k conj(c_k)/|c_k|. The LP dual is often
// one of many optimal vertices of the restricted problem; this picks the one
// that complementary slackness says the full problem wants.
std::vector<Complex> polish_dual(std::span<const Complex> b, const std::map<std::size_t, Complex>& coeff,
                                 const std::vector<AtomColumn>& atoms) {
  double cmax = 0.0;
  for (const auto& [id, c] : coeff) cmax = std::max(cmax, std::abs(c));
  std::vector<std::size_t> support;
  for (const auto& [id, c] : coeff) {
    if (std::abs(c) > 1e-12 * cmax) support.push_back(id);
  }
  if (support.empty()) return {b.begin(), b.end()};
  const auto r = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(support.size()), r);
  Eigen::VectorXcd d(e.rows());
  Eigen::VectorXcd beta(r);
  for (Eigen::Index i = 0; i < r; ++i) beta(i) = std::conj(b[static_cast<std::size_t>(i)]);
  for (std::size_t s = 0; s < support.size(); ++s) {
    const AtomColumn& a = atoms[support[s]];
    const Complex c = coeff.at(support[s]);
    for (Eigen::Index i = 0; i < r; ++i) e(static_cast<Eigen::Index>(s), i) = a.values[static_cast<std::size_t>(i)];
    d(static_cast<Eigen::Index>(s)) = a.weight * std::conj(c) / std::abs(c);
  }
  const linalg::LeastSquaresSolution ls = linalg::least_squares(e, d - e * beta);
  beta += ls.x;
  std::vector<Complex> out(b.size());
  for (Eigen::Index i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] = std::conj(beta(i));
  return out;
}

}  // namespace

AtomicL1Result minimize_atomic_l1(std::span<const Complex> target,
                                  const std::vector<AtomColumn>& initial, PricingOracle& oracle,
                                  const AtomicL1Options& options) {
  AtomicL1Result out;
  const std::size_t r = target.size();
  double tnorm = 0.0;
  for (const Complex& t : target) tnorm = std::max(tnorm, std::abs(t));
  if (tnorm == 0.0) {
    out.feasible = true;
    out.converged = true;
    out.dual.assign(r, Complex{});
    out.certified_sup = 0.0;
    return out;
  }

  ColumnPool pool;
  const int dirs = std::max(1, options.directions);
  for (const AtomColumn& a : initial) {
    const std::size_t id = pool.atom_id(a);
    for (int j = 0; j < dirs; ++j) pool.add(id, 2.0 * std::numbers::pi * j / dirs);
  }

  out.upper = std::numeric_limits<double>::infinity();
  out.lower = -std::numeric_limits<double>::infinity();

  for (int round = 0; round < options.max_rounds; ++round) {
    out.rounds = round + 1;
    const LinearProgram lp = pool.build(target);
    const LpSolution sol = solve_simplex(lp, options.simplex);
    out.pivots += sol.pivots;
    if (sol.status == LpStatus::kInfeasible) {
      out.feasible = false;
      return out;
    }
    if (sol.status != LpStatus::kOptimal) break;
    out.feasible = true;

    // Primal: gather rotated copies back into complex coefficients.
    std::map<std::size_t, Complex> coeff;
    for (std::size_t j = 0; j < pool.columns().size(); ++j) {
      const double w = sol.x(static_cast<Eigen::Index>(j));
      if (w == 0.0) continue;
      const Column& col = pool.columns()[j];
      coeff[col.atom] += w * std::polar(1.0, col.phase);
    }
    double upper = 0.0;
    std::vector<Complex> resid(target.begin(), target.end());
    std::vector<Atom> primal;
    for (const auto& [id, c] : coeff) {
      const AtomColumn& atom = pool.atoms()[id];
      upper += atom.weight * std::abs(c);
      for (std::size_t i = 0; i < r; ++i) resid[i] -= c * atom.values[i];
      primal.push_back({atom.location, c});
    }
    double res = 0.0;
    for (const Complex& z : resid) res = std::max(res, std::abs(z));
    out.upper_history.push_back(upper);
    if (upper < out.upper) {
      out.upper = upper;
      out.primal = std::move(primal);
      out.residual = res;
    }

    // Dual: b_i = y_re + i·y_im.
    std::vector<Complex> b(r);
    for (std::size_t i = 0; i < r; ++i) {
      b[i] = Complex(sol.y(static_cast<Eigen::Index>(2 * i)),
                     sol.y(static_cast<Eigen::Index>(2 * i + 1)));
    }
    const Pricing pr = oracle.price(b);
    const double value = pair(b, target).real();
    if (pr.certified_sup > 0.0) {
      const double lower = value / pr.certified_sup;
      if (lower > out.lower) {
        out.lower = lower;
        out.dual = b;
        out.certified_sup = pr.certified_sup;
        out.scope = pr.scope;
      }
    }

    if (out.upper - out.lower > options.tolerance) {
      const std::vector<Complex> polished = polish_dual(b, coeff, pool.atoms());
      const Pricing pp = oracle.price(polished);
      if (pp.certified_sup > 0.0) {
        const double lower = pair(polished, target).real() / pp.certified_sup;
        if (lower > out.lower) {
          out.lower = lower;
          out.dual = polished;
          out.certified_sup = pp.certified_sup;
          out.scope = pp.scope;
        }
      }
    }

    const double gap = out.upper - out.lower;
    if (gap <= options.tolerance || gap <= 1e-14 * std::max(1.0, out.upper)) {
      out.converged = true;
      break;
    }
    bool added = false;
    for (const AtomColumn& v : pr.violators) {
      const std::size_t id = pool.atom_id(v);
      const Complex p = pair(b, v.values);
      const double phase = -std::arg(p);
      added = pool.add(id, phase) || added;
      // The dual tends to slide to a neighbouring gap of the same polygon,
      // so cut the arc where |<b, e>| could exceed the weight as well.
      const double ratio = std::abs(p) / v.weight;
      if (ratio > 1.0) {
        const double width = std::acos(1.0 / ratio);
        for (int j : {-2, -1, 1, 2}) added = pool.add(id, phase + j * width) || added;
      }
    }
    if (!added) break;
  }
  if (out.lower < 0.0) out.lower = 0.0;
  if (out.upper < out.lower && out.lower - out.upper <= 1e-12 * std::max(1.0, out.upper)) {
    // Rounding-level crossover; the primal value is the one we can exhibit.
    out.lower = out.upper;
  }
  return out;
}

}  // namespace picknorm::lp

#include "picknorm/simplex.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>

namespace picknorm::lp {

namespace {

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class TableauSimplex {
 public:
  TableauSimplex(const LinearProgram& lp, const SimplexOptions& opt)
      : lp_(lp), opt_(opt), m_(lp.a.rows()), n_(lp.a.cols()) {
    ext_ = Eigen::MatrixXd::Zero(m_, n_ + m_ + 1);
    rhs_ = n_ + m_;
    basis_.resize(static_cast<std::size_t>(m_));
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double sign = lp.b(i) < 0.0 ? -1.0 : 1.0;
      ext_.row(i).head(n_) = sign * lp.a.row(i);
      ext_(i, n_ + i) = 1.0;
      ext_(i, rhs_) = sign * lp.b(i);
      basis_[static_cast<std::size_t>(i)] = n_ + i;
    }
    t_ = Tableau::Zero(m_ + 1, n_ + m_ + 1);
    t_.topRows(m_) = ext_;
    col_scale_ = Eigen::VectorXd::Ones(n_);
    for (Eigen::Index j = 0; j < n_; ++j) {
      const double s = ext_.col(j).cwiseAbs().maxCoeff();
      if (s > 0.0) col_scale_(j) = s;
    }
    cost_scale_ = std::max(1.0, lp.c.size() ? lp.c.cwiseAbs().maxCoeff() : 1.0);
    b_scale_ = std::max(1.0, lp.b.size() ? lp.b.cwiseAbs().maxCoeff() : 1.0);
  }

  LpSolution run() {
    LpSolution out;
    // Phase one: minimize the sum of artificials.
    cost_ = Eigen::VectorXd::Zero(n_ + m_);
    cost_.tail(m_).setOnes();
    reinvert();
    LpStatus st = iterate(1.0);
    out.pivots = pivots_;
    if (st == LpStatus::kIterationLimit) {
      out.status = st;
      return out;
    }
    if (-t_(m_, rhs_) > opt_.feasibility_tol * b_scale_) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    drive_out_artificials();

    // Phase two.
    cost_ = Eigen::VectorXd::Zero(n_ + m_);
    cost_.head(n_) = lp_.c;
    reinvert();
    st = iterate(cost_scale_);
    out.pivots = pivots_;
    out.status = st;
    if (st != LpStatus::kOptimal) return out;
    resolve(out);
    return out;
  }

 private:
  // Rebuilds the tableau for the current basis from the original data.
  bool reinvert() {
    Eigen::MatrixXd bmat(m_, m_);
    for (Eigen::Index i = 0; i < m_; ++i) bmat.col(i) = ext_.col(basis_[static_cast<std::size_t>(i)]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(bmat);
    if (!lu.isInvertible()) return false;
    t_.topRows(m_) = lu.solve(ext_);
    Eigen::VectorXd cb(m_);
    for (Eigen::Index i = 0; i < m_; ++i) cb(i) = cost_(basis_[static_cast<std::size_t>(i)]);
    t_.row(m_).head(n_ + m_) = cost_.transpose() - cb.transpose() * t_.topRows(m_).leftCols(n_ + m_);
    t_(m_, rhs_) = -cb.dot(t_.col(rhs_).head(m_));
    for (Eigen::Index i = 0; i < m_; ++i) {
      t_(m_, basis_[static_cast<std::size_t>(i)]) = 0.0;
      if (t_(i, rhs_) < 0.0 && t_(i, rhs_) > -1e-9 * b_scale_) t_(i, rhs_) = 0.0;
    }
    since_reinvert_ = 0;
    return true;
  }

  LpStatus iterate(double scale) {
    const double rc_tol = opt_.optimality_tol * scale;
    int degenerate = 0;
    bool retried = false;
    while (pivots_ < opt_.max_pivots) {
      if (since_reinvert_ >= 64) reinvert();
      // Dantzig pricing on scaled reduced costs; Bland's rule after a run of
      // degenerate pivots so cycling cannot persist.
      const bool bland = degenerate > 50;
      Eigen::Index enter = -1;
      double most = 0.0;
      for (Eigen::Index j = 0; j < n_; ++j) {
        const double rc = t_(m_, j);
        if (rc >= -rc_tol) continue;
        if (bland) {
          enter = j;
          break;
        }
        const double v = rc / col_scale_(j);
        if (v < most) {
          most = v;
          enter = j;
        }
      }
      if (enter < 0) {
        // Confirm against a fresh factorization before declaring optimality.
        if (since_reinvert_ > 0 && reinvert()) continue;
        return LpStatus::kOptimal;
      }
      const double piv_tol = std::max(opt_.pivot_tol, 1e-9 * t_.col(enter).head(m_).cwiseAbs().maxCoeff());
      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m_; ++i) {
        const double piv = t_(i, enter);
        if (piv <= piv_tol) continue;
        const double ratio = std::max(0.0, t_(i, rhs_)) / piv;
        const double tie = 1e-12 * std::max(1.0, ratio);
        bool take = leave < 0 || ratio < best - tie;
        if (!take && ratio <= best + tie) {
          take = bland ? basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)]
                       : piv > t_(leave, enter);
        }
        if (take) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave < 0) {
        if (!retried && since_reinvert_ > 0 && reinvert()) {
          retried = true;
          continue;
        }
        return LpStatus::kUnbounded;
      }
      retried = false;
      degenerate = best <= 1e-14 ? degenerate + 1 : 0;
      pivot(leave, enter);
    }
    return LpStatus::kIterationLimit;
  }

  void pivot(Eigen::Index r, Eigen::Index j) {
    t_.row(r) /= t_(r, j);
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = t_(i, j);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = j;
    ++pivots_;
    ++since_reinvert_;
  }

  void drive_out_artificials() {
    redundant_.assign(static_cast<std::size_t>(m_), false);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) continue;
      Eigen::Index best = -1;
      double best_abs = 1e-9;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (std::find(basis_.begin(), basis_.end(), j) != basis_.end()) continue;
        if (std::abs(t_(i, j)) / col_scale_(j) > best_abs) {
          best_abs = std::abs(t_(i, j)) / col_scale_(j);
          best = j;
        }
      }
      if (best >= 0) {
        pivot(i, best);
      } else {
        redundant_[static_cast<std::size_t>(i)] = true;
      }
    }
  }

  void resolve(LpSolution& out) {
    std::vector<Eigen::Index> rows;
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (redundant_[static_cast<std::size_t>(i)]) continue;
      rows.push_back(i);
      cols.push_back(basis_[static_cast<std::size_t>(i)]);
    }
    const auto k = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd bmat(k, k);
    Eigen::VectorXd rhs(k);
    Eigen::VectorXd cb(k);
    for (Eigen::Index r = 0; r < k; ++r) {
      rhs(r) = lp_.b(rows[static_cast<std::size_t>(r)]);
      const Eigen::Index c0 = cols[static_cast<std::size_t>(r)];
      cb(r) = c0 < n_ ? lp_.c(c0) : 0.0;
      for (Eigen::Index c = 0; c < k; ++c) {
        const Eigen::Index cc = cols[static_cast<std::size_t>(c)];
        const Eigen::Index rr = rows[static_cast<std::size_t>(r)];
        bmat(r, c) = cc < n_ ? lp_.a(rr, cc) : (cc - n_ == rr ? (lp_.b(rr) < 0.0 ? -1.0 : 1.0) : 0.0);
      }
    }
    out.x = Eigen::VectorXd::Zero(n_);
    out.y = Eigen::VectorXd::Zero(m_);
    if (k > 0) {
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(bmat);
      const Eigen::VectorXd xb = lu.solve(rhs);
      const Eigen::VectorXd yr = lu.transpose().solve(cb);
      for (Eigen::Index r = 0; r < k; ++r) {
        const Eigen::Index c0 = cols[static_cast<std::size_t>(r)];
        if (c0 < n_) out.x(c0) = xb(r);
        out.y(rows[static_cast<std::size_t>(r)]) = yr(r);
      }
    }
    out.objective = lp_.c.dot(out.x);
    out.basis = basis_;
  }

  const LinearProgram& lp_;
  SimplexOptions opt_;
  Eigen::Index m_;
  Eigen::Index n_;
  Eigen::Index rhs_ = 0;
  Eigen::MatrixXd ext_;
  Tableau t_;
  Eigen::VectorXd cost_;
  Eigen::VectorXd col_scale_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> redundant_;
  double cost_scale_ = 1.0;
  double b_scale_ = 1.0;
  int pivots_ = 0;
  int since_reinvert_ = 0;
};

}  // namespace

LpSolution solve_simplex(const LinearProgram& program, const SimplexOptions& options) {
  TableauSimplex solver(program, options);
  return solver.run();
}

}  // namespace picknorm::lp

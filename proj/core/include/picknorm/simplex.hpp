#pragma once

#include <Eigen/Core>

#include <vector>

namespace picknorm::lp {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

/// minimize c·x  subject to  a·x = b,  x ≥ 0.
struct LinearProgram {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct SimplexOptions {
  double feasibility_tol = 1e-9;  ///< phase-one residual accepted as feasible (relative to |b|)
  double optimality_tol = 1e-12;  ///< reduced-cost threshold (relative to |c|)
  double pivot_tol = 1e-11;
  int max_pivots = 200000;
};

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  Eigen::VectorXd x;  ///< primal solution
  Eigen::VectorXd y;  ///< equality multipliers, c - aᵀy ≥ 0 at optimality
  double objective = 0.0;
  int pivots = 0;
  std::vector<Eigen::Index> basis;
};

/// Dense two-phase primal simplex with Bland's anti-cycling rule. On
/// optimality the basic solution and the duals are recomputed from the
/// original data by a fresh LU solve of the final basis, so tableau drift does
/// not leak into the returned values.
[[nodiscard]] LpSolution solve_simplex(const LinearProgram& program,
                                       const SimplexOptions& options = {});

}  // namespace picknorm::lp

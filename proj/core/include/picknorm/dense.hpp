#pragma once

#include <Eigen/Core>

#include <vector>

#include "picknorm/problem.hpp"

namespace picknorm::linalg {

/// Orthonormal basis (as columns) of {x : a·x = 0}. Singular values below
/// rel_tol·σ_max count as zero.
[[nodiscard]] Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& a, double rel_tol = 1e-10);

/// Orthonormal basis (as columns) of the column space of a.
[[nodiscard]] Eigen::MatrixXcd orth(const Eigen::MatrixXcd& a, double rel_tol = 1e-10);

struct LeastSquaresSolution {
  Eigen::VectorXcd x;     ///< minimum-norm minimizer of |a·x - b|
  double residual = 0.0;  ///< |a·x - b|
};

[[nodiscard]] LeastSquaresSolution least_squares(const Eigen::MatrixXcd& a,
                                                 const Eigen::VectorXcd& b);

/// Stacks vectors of equal length as the columns of a matrix.
[[nodiscard]] Eigen::MatrixXcd columns_of(const std::vector<std::vector<Complex>>& vectors,
                                          std::size_t length);

[[nodiscard]] std::vector<Complex> to_std(const Eigen::VectorXcd& v);
[[nodiscard]] Eigen::VectorXcd to_eigen(std::span<const Complex> v);

}  // namespace picknorm::linalg

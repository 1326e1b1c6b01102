#pragma once

#include <Eigen/Core>
#include <vector>

namespace picknorm::linalg {

struct JacobiOptions {
  int max_sweeps = 100;
  /// Sweeps stop once the off-diagonal Frobenius mass drops below this
  /// fraction of the full Frobenius norm.
  double relative_threshold = 1e-14;
};

struct HermitianSpectrum {
  std::vector<double> eigenvalues;  ///< ascending
  int sweeps = 0;

  [[nodiscard]] double min() const { return eigenvalues.front(); }
};

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on its real
/// symmetric embedding [[Re H, -Im H], [Im H, Re H]] (every eigenvalue of H
/// appears twice there). Only the lower triangle of `h` is read.
/// Throws Error(EigensolveFailure) when the sweep cap is reached.
[[nodiscard]] HermitianSpectrum hermitian_eigenvalues(const Eigen::MatrixXcd& h,
                                                      const JacobiOptions& options = {});

/// Cyclic Jacobi on a real symmetric matrix, in place; the diagonal holds the
/// eigenvalues on return. Returns the number of sweeps used.
int jacobi_diagonalize(Eigen::MatrixXd& a, const JacobiOptions& options = {});

}  // namespace picknorm::linalg

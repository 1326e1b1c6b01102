#include "picknorm/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "picknorm/error.hpp"

namespace picknorm::linalg {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

}  // namespace

int jacobi_diagonalize(Eigen::MatrixXd& a, const JacobiOptions& options) {
  const Eigen::Index n = a.rows();
  const double frob = a.norm();
  if (frob == 0.0 || n < 2) return 0;
  const double threshold = options.relative_threshold * frob;

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return sweep;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  if (off_diagonal_norm(a) <= threshold) return options.max_sweeps;
  throw Error(ErrorCode::kEigensolveFailure,
              "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
}

HermitianSpectrum hermitian_eigenvalues(const Eigen::MatrixXcd& h, const JacobiOptions& options) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd s(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j; i < n; ++i) {
      const double re = h(i, j).real();
      const double im = (i == j) ? 0.0 : h(i, j).imag();
      s(i, j) = s(j, i) = re;
      s(n + i, n + j) = s(n + j, n + i) = re;
      // Im H is antisymmetric; embedding block [[A, -B], [B, A]].
      s(n + i, j) = im;
      s(j, n + i) = im;
      s(n + j, i) = -im;
      s(i, n + j) = -im;
    }
  }
  HermitianSpectrum out;
  out.sweeps = jacobi_diagonalize(s, options);
  std::vector<double> doubled(static_cast<std::size_t>(2 * n));
  for (Eigen::Index i = 0; i < 2 * n; ++i) doubled[static_cast<std::size_t>(i)] = s(i, i);
  std::sort(doubled.begin(), doubled.end());
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < doubled.size(); i += 2) out.eigenvalues.push_back(doubled[i]);
  return out;
}

}  // namespace picknorm::linalg

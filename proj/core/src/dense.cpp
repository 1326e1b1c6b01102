#include "picknorm/dense.hpp"

#include <Eigen/SVD>

namespace picknorm::linalg {

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0 || n == 0) return Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * smax && sv(i) > 0.0) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

Eigen::MatrixXcd orth(const Eigen::MatrixXcd& a, double rel_tol) {
  if (a.cols() == 0 || a.rows() == 0) return Eigen::MatrixXcd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * smax && sv(i) > 0.0) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

LeastSquaresSolution least_squares(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b) {
  LeastSquaresSolution out;
  if (a.cols() == 0) {
    out.x = Eigen::VectorXcd(0);
    out.residual = b.norm();
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  out.x = svd.solve(b);
  out.residual = (a * out.x - b).norm();
  return out;
}

Eigen::MatrixXcd columns_of(const std::vector<std::vector<Complex>>& vectors, std::size_t length) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(length), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (std::size_t i = 0; i < length; ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vectors[j][i];
    }
  }
  return m;
}

std::vector<Complex> to_std(const Eigen::VectorXcd& v) {
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

Eigen::VectorXcd to_eigen(std::span<const Complex> v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

}  // namespace picknorm::linalg

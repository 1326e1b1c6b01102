#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <random>

#include "picknorm/dense.hpp"
#include "picknorm/jacobi.hpp"
#include "picknorm/simplex.hpp"

namespace picknorm {
namespace {

Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  return (a + a.adjoint()) / 2.0;
}

TEST(Jacobi, MatchesEigenSelfAdjointSolver) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::MatrixXcd h = random_hermitian(n, rng);
      const linalg::HermitianSpectrum ours = linalg::hermitian_eigenvalues(h);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(h, Eigen::EigenvaluesOnly);
      ASSERT_EQ(ours.eigenvalues.size(), static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(ours.eigenvalues[static_cast<std::size_t>(i)], ref.eigenvalues()(i), 1e-11);
      }
    }
  }
}

TEST(Jacobi, DiagonalInputNeedsNoSweeps) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
  h(0, 0) = 3.0;
  h(1, 1) = -1.0;
  h(2, 2) = 2.0;
  const auto s = linalg::hermitian_eigenvalues(h);
  EXPECT_EQ(s.eigenvalues, (std::vector<double>{-1.0, 2.0, 3.0}));
  EXPECT_DOUBLE_EQ(s.min(), -1.0);
}

TEST(Dense, NullSpaceIsAnnihilatedAndOrthonormal) {
  Eigen::MatrixXcd a(2, 4);
  a << 1.0, 2.0, 0.0, Complex(0, 1), 0.0, 1.0, 1.0, 1.0;
  const Eigen::MatrixXcd n = linalg::null_space(a);
  ASSERT_EQ(n.cols(), 2);
  EXPECT_LT((a * n).norm(), 1e-12);
  EXPECT_LT((n.adjoint() * n - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-12);
}

TEST(Dense, LeastSquaresSolvesConsistentSystem) {
  Eigen::MatrixXcd a(3, 2);
  a << 1.0, 0.0, 0.0, 1.0, 1.0, 1.0;
  Eigen::VectorXcd x(2);
  x << Complex(1, 2), Complex(-3, 0.5);
  const auto sol = linalg::least_squares(a, a * x);
  EXPECT_LT((sol.x - x).norm(), 1e-12);
  EXPECT_LT(sol.residual, 1e-12);
}

// Brute force: every basic solution of a small standard-form LP.
double vertex_enumeration(const lp::LinearProgram& p) {
  const auto m = p.a.rows();
  const auto n = p.a.cols();
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    Eigen::MatrixXd b(m, m);
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) cols.push_back(j);
    }
    for (Eigen::Index c = 0; c < m; ++c) b.col(c) = p.a.col(cols[static_cast<std::size_t>(c)]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd xb = lu.solve(p.b);
    if (xb.minCoeff() < -1e-12) continue;
    double obj = 0.0;
    for (Eigen::Index c = 0; c < m; ++c) obj += p.c(cols[static_cast<std::size_t>(c)]) * xb(c);
    best = std::min(best, obj);
  }
  return best;
}

TEST(Simplex, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    lp::LinearProgram p;
    const int m = 2 + trial % 3;
    const int n = m + 3 + trial % 4;
    p.a.resize(m, n);
    p.b.resize(m);
    p.c.resize(n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) p.a(i, j) = u(rng);
      p.b(i) = u(rng);
    }
    for (int j = 0; j < n; ++j) p.c(j) = 0.5 + std::abs(u(rng));  // positive costs: bounded
    const double ref = vertex_enumeration(p);
    const lp::LpSolution sol = lp::solve_simplex(p);
    if (!std::isfinite(ref)) {
      EXPECT_EQ(sol.status, lp::LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(sol.status, lp::LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(sol.objective, ref, 1e-9 * std::max(1.0, std::abs(ref))) << "trial " << trial;
    EXPECT_LT((p.a * sol.x - p.b).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_GE(sol.x.minCoeff(), -1e-12);
    // Dual feasibility and strong duality.
    EXPECT_GE((p.c - p.a.transpose() * sol.y).minCoeff(), -1e-10);
    EXPECT_NEAR(p.b.dot(sol.y), ref, 1e-9 * std::max(1.0, std::abs(ref)));
    ++solved;
  }
  EXPECT_GT(solved, 50);
}

TEST(Simplex, HandlesRedundantRows) {
  lp::LinearProgram p;
  p.a.resize(2, 3);
  p.a << 1, 1, 1, 2, 2, 2;
  p.b.resize(2);
  p.b << 1, 2;
  p.c.resize(3);
  p.c << 3, 1, 2;
  const auto sol = lp::solve_simplex(p);
  ASSERT_EQ(sol.status, lp::LpStatus::kOptimal);
  EXPECT_NEAR(sol.objective, 1.0, 1e-12);
}

TEST(Simplex, DetectsInfeasibility) {
  lp::LinearProgram p;
  p.a.resize(1, 2);
  p.a << 1, 1;
  p.b.resize(1);
  p.b << -1;
  p.c = Eigen::VectorXd::Ones(2);
  EXPECT_EQ(lp::solve_simplex(p).status, lp::LpStatus::kInfeasible);
}

}  // namespace
}  // namespace picknorm

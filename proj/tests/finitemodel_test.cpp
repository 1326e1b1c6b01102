#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "picknorm/error.hpp"
#include "picknorm/finitemodel.hpp"

namespace picknorm {
namespace {

using finite::np_norm_generic;

// Indicator basis of a coordinate partition; block[k] is the block of k.
std::vector<std::vector<Complex>> partition_basis(const std::vector<int>& block, int blocks) {
  std::vector<std::vector<Complex>> basis(static_cast<std::size_t>(blocks),
                                          std::vector<Complex>(block.size()));
  for (std::size_t k = 0; k < block.size(); ++k) basis[static_cast<std::size_t>(block[k])][k] = 1.0;
  return basis;
}

// An element of a partition algebra is constant on blocks; the block of site
// i is pinned to a_i and every other block is best left at zero.
double partition_oracle(NormKind kind, const std::vector<double>& w, double p,
                        const std::vector<int>& block, const std::vector<int>& subset,
                        const std::vector<Complex>& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const int b = block[static_cast<std::size_t>(subset[i] - 1)];
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (block[k] != b) continue;
      const double m = std::abs(a[i]);
      switch (kind) {
        case NormKind::kWeightedSup: acc = std::max(acc, w[k] * m); break;
        case NormKind::kWeightedL1: acc += w[k] * m; break;
        case NormKind::kLp: acc += std::pow(m, p); break;
      }
    }
  }
  return kind == NormKind::kLp ? std::pow(acc, 1.0 / p) : acc;
}

TEST(FiniteModel, FullAlgebraClosedForms) {
  const std::vector<int> s{1, 3};
  const std::vector<Complex> a{Complex(0.6, 0.8), -2.0};
  const auto sup = finite::np_norm(FiniteAlgebra::sup({1.0, 5.0, 0.5}), s, a, 1e-10);
  EXPECT_NEAR(sup.upper, 1.0, 1e-12);  // max(1·1, 0.5·2)
  const auto l1 = finite::np_norm(FiniteAlgebra::l1({2.0, 5.0, 0.5}), s, a, 1e-10);
  EXPECT_NEAR(l1.upper, 3.0, 1e-12);
  const auto lp = finite::np_norm(FiniteAlgebra::lp(3, 3.0), s, a, 1e-10);
  EXPECT_NEAR(lp.upper, std::cbrt(9.0), 1e-12);
}

TEST(FiniteModel, UnitSupNormEqualsMaxTarget) {
  const std::vector<int> s{1, 2, 4};
  const std::vector<Complex> a{0.2, Complex(0.0, -0.9), 0.5};
  const auto r = finite::np_norm(FiniteAlgebra::sup({1, 1, 1, 1}), s, a, 1e-10);
  EXPECT_NEAR(r.lower, 0.9, 1e-12);
  EXPECT_NEAR(r.upper, 0.9, 1e-12);
}

TEST(FiniteModel, GenericSolverMatchesPartitionOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 150; ++trial) {
    const int dim = 2 + trial % 5;
    const int blocks = 1 + static_cast<int>(rng() % static_cast<unsigned>(dim));
    std::vector<int> block(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) block[static_cast<std::size_t>(k)] = k < blocks ? k : static_cast<int>(rng() % static_cast<unsigned>(blocks));
    // One site per block, at its first coordinate.
    std::vector<int> subset;
    std::vector<Complex> a;
    for (int b = 0; b < blocks; ++b) {
      if (rng() % 2 == 0 && !(b == blocks - 1 && subset.empty())) continue;
      subset.push_back(b + 1);
      a.emplace_back(u(rng), u(rng));
    }
    const auto kind = static_cast<NormKind>(trial % 3);
    std::vector<double> w(static_cast<std::size_t>(dim), 1.0);
    double p = 1.0;
    if (kind == NormKind::kLp) {
      p = 1.2 + 0.3 * (trial % 7);
    } else {
      for (double& x : w) x = 1.0 + std::abs(u(rng)) * 2.0;
    }
    FiniteAlgebra alg{kind, w, p, partition_basis(block, blocks)};
    const double ref = partition_oracle(kind, w, p, block, subset, a);
    const NormResult r = np_norm_generic(alg, subset, a, 1e-10);
    EXPECT_NEAR(r.lower, ref, 1e-8 * std::max(1.0, ref)) << "trial " << trial;
    EXPECT_NEAR(r.upper, ref, 1e-8 * std::max(1.0, ref)) << "trial " << trial;
  }
}

TEST(FiniteModel, DualNormsPairCorrectly) {
  const finite::NormSpec sup{NormKind::kWeightedSup, {2.0, 4.0}, 1.0};
  const auto d = finite::dual_norm(sup);
  EXPECT_EQ(d.kind, NormKind::kWeightedL1);
  EXPECT_EQ(d.weights, (std::vector<double>{0.5, 0.25}));
  const finite::NormSpec lp{NormKind::kLp, {1.0, 1.0}, 3.0};
  EXPECT_DOUBLE_EQ(finite::dual_norm(lp).p, 1.5);
  // Hölder: |Σ x y| ≤ ‖x‖·‖y‖_*.
  const std::vector<Complex> x{Complex(1, 2), -0.5};
  const std::vector<Complex> y{0.3, Complex(0, 1)};
  const double pairing = std::abs(x[0] * y[0] + x[1] * y[1]);
  EXPECT_LE(pairing, finite::evaluate(sup, x) * finite::evaluate(d, y) + 1e-15);
}

TEST(FiniteModel, NonClosedBasisIsRejected) {
  FiniteAlgebra alg = FiniteAlgebra::sup({1, 1, 1}, {{1.0, 1.0, 1.0}, {0.0, 1.0, 2.0}});
  EXPECT_GT(finite::closure_defect(alg), 0.1);
  try {
    finite::validate_algebra(alg);
    FAIL() << "non-closed basis accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAnAlgebra);
  }
  FiniteAlgebra ok = FiniteAlgebra::sup({1, 1, 1}, {{1.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
  EXPECT_NO_THROW(finite::validate_algebra(ok));
  EXPECT_LT(finite::closure_defect(ok), 1e-14);
}

TEST(FiniteModel, ClosedFormRefusesSubalgebras) {
  FiniteAlgebra alg = FiniteAlgebra::sup({1, 1}, {{1.0, 1.0}});
  const std::vector<int> s{1};
  const std::vector<Complex> a{1.0};
  try {
    (void)finite::np_norm_closed_form(alg, s, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedForSubalgebra);
  }
}

TEST(FiniteModel, CosetWithoutInterpolantIsInfeasible) {
  // Both coordinates lie in one block, so (1, -1) is not attainable.
  FiniteAlgebra alg = FiniteAlgebra::sup({1, 1}, {{1.0, 1.0}});
  const std::vector<int> s{1, 2};
  const std::vector<Complex> a{1.0, -1.0};
  try {
    (void)np_norm_generic(alg, s, a, 1e-9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleCoset);
  }
}

TEST(NPInfty, UnitSupIsNPInfty) {
  const auto v = finite::np_infty_test(FiniteAlgebra::sup({1, 1, 1}), 40, 7);
  EXPECT_TRUE(v.is_np_infty);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_GT(v.problems_checked, 0);
}

TEST(NPInfty, L1WitnessIsAllOnesOnBothCoordinates) {
  const auto v = finite::np_infty_test(FiniteAlgebra::l1({1, 1}), 40, 7);
  ASSERT_FALSE(v.is_np_infty);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->subset, (std::vector<int>{1, 2}));
  EXPECT_EQ(v.witness->targets, (std::vector<Complex>{1.0, 1.0}));
  EXPECT_NEAR(v.witness->np_value, 2.0, 1e-9);
  EXPECT_NEAR(v.witness->sup_value, 1.0, 1e-15);
}

TEST(NPInfty, WeightedSupWitnessIsHeavyCoordinate) {
  const auto v = finite::np_infty_test(FiniteAlgebra::sup({2, 1}), 40, 7);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->subset, (std::vector<int>{1}));
  EXPECT_EQ(v.witness->targets, (std::vector<Complex>{1.0}));
  EXPECT_NEAR(v.witness->np_value, 2.0, 1e-9);
}

TEST(NPInfty, SameSeedSameVerdict) {
  const FiniteAlgebra alg = FiniteAlgebra::lp(3, 2.5);
  const auto a = finite::np_infty_test(alg, 30, 99);
  const auto b = finite::np_infty_test(alg, 30, 99);
  EXPECT_EQ(a.is_np_infty, b.is_np_infty);
  EXPECT_EQ(a.problems_checked, b.problems_checked);
  EXPECT_EQ(a.worst_gap, b.worst_gap);
}

TEST(Scattered, CharacterAnnihilator) {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const std::vector<std::vector<Complex>> basis{{1.0, 1.0, 1.0}, {1.0, w, w * w}};
  const auto mu = finite::annihilating_functional(basis, 3);
  ASSERT_TRUE(mu.has_value());
  for (const auto& v : basis) {
    Complex s{};
    for (std::size_t k = 0; k < 3; ++k) s += (*mu)[k] * v[k];
    EXPECT_LT(std::abs(s), 1e-14);
  }
  double mass = 0.0;
  for (const Complex& m : *mu) {
    mass += std::abs(m);
    EXPECT_NEAR(std::abs(m), 1.0 / 3.0, 1e-14);
  }
  EXPECT_NEAR(mass, 1.0, 1e-14);
  EXPECT_FALSE(finite::annihilating_functional({{1.0, 0.0}, {0.0, 1.0}}, 2).has_value());
}

TEST(Scattered, ContradictionChainIsConsistent) {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  FiniteAlgebra alg = FiniteAlgebra::sup({1, 1, 1}, {{1.0, 1.0, 1.0}, {1.0, w, w * w}});
  const auto rep = finite::scattered_contradiction_check(alg, 1e-9);
  EXPECT_FALSE(rep.closed_under_products);
  EXPECT_NE(rep.branch, finite::ScatteredBranch::kDense);
  EXPECT_NEAR(rep.head_mass + rep.tail_mass, 1.0, 1e-12);
  if (rep.np) {
    // Whatever interpolant exists pairs to zero with μ, so its norm is large.
    EXPECT_GE(rep.np->upper, rep.implied_norm_lower - 1e-9);
  }
}

}  // namespace
}  // namespace picknorm

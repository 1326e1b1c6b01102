#include <gtest/gtest.h>

#include <cmath>

#include "picknorm/error.hpp"
#include "picknorm/gleason.hpp"

namespace picknorm {
namespace {

using namespace gleason;

// sup{|f(λ₁) - f(λ₂)| : ‖f‖_∞ ≤ 1} for the disc, in terms of the
// pseudo-hyperbolic distance ρ.
double hardy_oracle(Complex a, Complex b) {
  const double rho = std::abs(a - b) / std::abs(1.0 - std::conj(b) * a);
  return 2.0 * (1.0 - std::sqrt(1.0 - rho * rho)) / rho;
}

TEST(Gleason, FiniteClosedForms) {
  const Interval l1 = gleason_distance_finite(FiniteAlgebra::l1({1, 1}), 1, 2);
  EXPECT_NEAR(l1.lower, 1.0, 1e-8);
  EXPECT_NEAR(l1.upper, 1.0, 1e-8);
  const Interval sup = gleason_distance_finite(FiniteAlgebra::sup({1, 1}), 1, 2);
  EXPECT_NEAR(sup.lower, 2.0, 1e-8);
  EXPECT_NEAR(sup.upper, 2.0, 1e-8);
  // max(2|x₁|, |x₂|) ≤ 1 allows x = (1/2, -1).
  const Interval ws = gleason_distance_finite(FiniteAlgebra::sup({2, 1}), 1, 2);
  EXPECT_NEAR(ws.upper, 1.5, 1e-8);
  // ℓp: the extremal element is (t, -t) with 2tᵖ = 1.
  const Interval lp = gleason_distance_finite(FiniteAlgebra::lp(2, 3.0), 1, 2);
  EXPECT_NEAR(lp.upper, std::pow(2.0, 1.0 - 1.0 / 3.0), 1e-8);
  EXPECT_LE(lp.lower, lp.upper);
}

TEST(Gleason, HardyMatchesExtremalFormula) {
  EXPECT_NEAR(gleason_distance_hardy(0.0, 0.5).interval.lower, 4.0 - 2.0 * std::sqrt(3.0), 1e-4);
  double prev = 0.0;
  for (double rho : {0.3, 0.5, 0.7, 0.9, 0.99}) {
    const HardyDistance d = gleason_distance_hardy(0.0, rho);
    EXPECT_NEAR(d.interval.lower, hardy_oracle(0.0, rho), 1e-8) << rho;
    EXPECT_LE(d.interval.lower, d.interval.upper);
    EXPECT_GT(d.interval.lower, prev);
    prev = d.interval.lower;
  }
  const Complex a(0.2, -0.3);
  const Complex b(-0.4, 0.5);
  const HardyDistance d = gleason_distance_hardy(a, b);
  EXPECT_NEAR(d.interval.lower, hardy_oracle(a, b), 1e-8);
  EXPECT_TRUE(d.tightened);
  EXPECT_LE(d.interval.upper - d.interval.lower, 1e-8);
}

TEST(Gleason, HardySitesFormOnePart) {
  const std::vector<Site> sites{DiscPoint{0.0}, DiscPoint{0.5}, DiscPoint{Complex(0.0, -0.9)}};
  const GleasonReport r = part_partition(Backend::kHardy, sites, std::nullopt);
  ASSERT_EQ(r.partition.size(), 1u);
  EXPECT_EQ(r.partition[0], (std::vector<int>{0, 1, 2}));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(r.distances[i][i].upper, 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(r.distances[i][j].lower, r.distances[j][i].lower);
      if (i != j) {
        EXPECT_EQ(r.relation[i][j], PartRelation::kSame);
      }
    }
  }
}

TEST(Gleason, UnitSupCoordinatesAreSingletons) {
  const std::vector<Site> sites{CoordinateIndex{1}, CoordinateIndex{2}, CoordinateIndex{3}};
  const GleasonReport r = part_partition(Backend::kFiniteSup, sites, FiniteAlgebra::sup({1, 1, 1}));
  EXPECT_EQ(r.partition.size(), 3u);
  EXPECT_NEAR(r.distances[0][2].lower, 2.0, 1e-8);
  EXPECT_EQ(r.relation[0][1], PartRelation::kDifferent);
}

TEST(Gleason, NeedsTwoSites) {
  const std::vector<Site> one{DiscPoint{0.1}};
  EXPECT_THROW((void)part_partition(Backend::kHardy, one, std::nullopt), Error);
}

TEST(Theorem4, UnitSupPairsAreCertifiedAtDistanceTwo) {
  const std::vector<Site> sites{CoordinateIndex{1}, CoordinateIndex{2}, CoordinateIndex{3}};
  const Theorem4Report r = theorem4_check(Backend::kFiniteSup, sites, FiniteAlgebra::sup({1, 1, 1}));
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.all_certified);
  EXPECT_FALSE(r.any_witness);
  ASSERT_EQ(r.pairs.size(), 3u);
  for (const Theorem4Pair& p : r.pairs) {
    EXPECT_NEAR(p.np.upper, 1.0, 1e-9);
    EXPECT_NEAR(p.certified_distance, 2.0, 1e-8);
    EXPECT_TRUE(p.consistent);
  }
}

TEST(Theorem4, WitnessBackendsClaimNoCertification) {
  const std::vector<Site> s2{CoordinateIndex{1}, CoordinateIndex{2}};
  const Theorem4Report l1 = theorem4_check(Backend::kFiniteL1, s2, FiniteAlgebra::l1({1, 1}));
  EXPECT_TRUE(l1.any_witness);
  EXPECT_FALSE(l1.all_certified);
  for (const auto& p : l1.pairs) EXPECT_FALSE(p.certified);
  EXPECT_TRUE(l1.passed);

  const std::vector<Site> disc{DiscPoint{0.0}, DiscPoint{0.5}};
  const Theorem4Report h = theorem4_check(Backend::kHardy, disc, std::nullopt);
  EXPECT_TRUE(h.any_witness);
  EXPECT_FALSE(h.pairs[0].certified);
  EXPECT_TRUE(h.passed);
}

}  // namespace
}  // namespace picknorm

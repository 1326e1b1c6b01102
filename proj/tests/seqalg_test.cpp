#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "picknorm/compute.hpp"
#include "picknorm/error.hpp"
#include "picknorm/seqalg.hpp"

namespace picknorm {
namespace {

constexpr double kPi = std::numbers::pi;

InterpolationProblem torus_problem(std::vector<long long> ks, std::vector<Complex> a) {
  InterpolationProblem p;
  p.backend = Backend::kL1Torus;
  for (long long k : ks) p.sites.push_back(IntegerCharacter{k});
  p.targets = std::move(a);
  return p;
}

TEST(AnalyticWiener, SingleSiteIsModulus) {
  for (Complex l : {Complex(0.0), Complex(0.3, -0.4), Complex(0.0, 1.0)}) {
    const std::vector<Complex> ls{l};
    const std::vector<Complex> a{Complex(-0.7, 0.2)};
    const NormResult r = seqalg::np_norm_analytic_wiener(ls, a, 1e-10);
    EXPECT_NEAR(r.lower, std::abs(a[0]), 1e-9);
    EXPECT_NEAR(r.upper, std::abs(a[0]), 1e-9);
  }
}

// f(0) = 0, f(r) = s: every admissible series has Σ_{k≥1} c_k r^k = s and
// r^k ≤ r, so ‖f‖ ≥ s/r, attained by f = (s/r)·z.
TEST(AnalyticWiener, OriginAndRealPointGrid) {
  for (int ri = 0; ri < 5; ++ri) {
    for (int si = 0; si < 5; ++si) {
      const double r = 0.1 + 0.2 * ri;
      const double s = 0.1 + 0.2 * si;
      const std::vector<Complex> l{0.0, r};
      const std::vector<Complex> a{0.0, s};
      const NormResult res = seqalg::np_norm_analytic_wiener(l, a, 1e-9);
      EXPECT_NEAR(res.lower, s / r, 1e-6);
      EXPECT_NEAR(res.upper, s / r, 1e-6);
      EXPECT_LE(res.gap(), 1e-6);
    }
  }
}

TEST(AnalyticWiener, CertificateSurvivesIndependentRecheck) {
  InterpolationProblem p;
  p.backend = Backend::kAnalyticWiener;
  p.sites = {DiscPoint{0.0}, DiscPoint{Complex(0.3, 0.4)}, DiscPoint{-0.6}};
  p.targets = {1.0, Complex(0.0, -1.0), 0.5};
  const NormResult r = compute_np_norm(p);
  const double bound = seqalg::dual_certificate_check(seqalg::certificate_of(r), p);
  EXPECT_GE(bound, r.lower - 1e-9);
  EXPECT_LE(bound, r.upper + 1e-12);
}

TEST(AnalyticWiener, BoundarySitesGetALongWindow) {
  const std::vector<Complex> l{0.5, 1.0};
  EXPECT_GE(seqalg::plan_analytic_wiener(l).degree, 64);
  const std::vector<Complex> inner{0.5};
  const auto plan = seqalg::plan_analytic_wiener(inner, 1e-12);
  EXPECT_LE(std::pow(0.5, plan.degree + 1) / 0.5, 1e-12);
}

TEST(Wiener, ThirdRootsExample) {
  const std::vector<double> th{0.0, 2.0 * kPi / 3.0};
  const std::vector<Complex> a{1.0, -1.0};
  const NormResult r = seqalg::np_norm_wiener(th, a, 1e-9);
  EXPECT_NEAR(r.lower, 2.0 / std::sqrt(3.0), 1e-5);
  EXPECT_NEAR(r.upper, 2.0 / std::sqrt(3.0), 1e-5);
  EXPECT_EQ(r.certificate.scope, CertificateScope::kPeriodic);
}

TEST(Wiener, AntipodalPairIsOne) {
  // e^{ikθ} with k = 1 takes (1, -1) at (0, π); the floor is 1.
  const std::vector<double> th{0.0, kPi};
  const std::vector<Complex> a{1.0, -1.0};
  const NormResult r = seqalg::np_norm_wiener(th, a, 1e-9);
  EXPECT_NEAR(r.lower, 1.0, 1e-9);
  EXPECT_NEAR(r.upper, 1.0, 1e-9);
}

TEST(Wiener, RationalAngleDetection) {
  const std::vector<double> th{0.0, 2.0 * kPi / 3.0, kPi / 2.0};
  const auto ra = seqalg::detect_rational_angles(th);
  ASSERT_TRUE(ra.has_value());
  EXPECT_EQ(ra->period, 12);
  EXPECT_EQ(ra->numerators, (std::vector<long long>{0, 4, 3}));
  const std::vector<double> irr{0.0, 1.0};
  EXPECT_FALSE(seqalg::detect_rational_angles(irr).has_value());
}

TEST(L1Torus, HandCertificateIsAccepted) {
  const InterpolationProblem p = torus_problem({0, 1, 2}, {1.0, 1.0, -1.0});
  const double s5 = std::sqrt(5.0);
  seqalg::DualCertificate cert;
  cert.b = {1.0 / s5, 1.0 / s5, -1.0 / s5};
  cert.certified_sup = 1.0;
  cert.bound = 3.0 / s5;
  const double bound = seqalg::dual_certificate_check(cert, p);
  EXPECT_GE(bound, 3.0 / s5 - 1e-6);

  const NormResult r = compute_np_norm(p);
  EXPECT_GE(r.lower, 3.0 / s5 - 1e-6);
  EXPECT_LE(r.lower, r.upper);
}

TEST(L1Torus, OverclaimedCertificateIsRejected) {
  const InterpolationProblem p = torus_problem({0, 1, 2}, {1.0, 1.0, -1.0});
  seqalg::DualCertificate cert;
  cert.b = {1.0, 1.0, -1.0};  // sup |1 + e^{iθ} - e^{2iθ}| = √5 > 2
  cert.certified_sup = 2.0;
  cert.bound = 1.5;
  try {
    (void)seqalg::dual_certificate_check(cert, p);
    FAIL() << "overclaimed certificate accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCertificateRejected);
  }
}

// For two characters 0 and k the norm is max(|a_0|, |a_k|): two antipodal
// masses (in the variable kθ) reach it, and |μ̂(j)| ≤ ‖μ‖ bounds it below.
TEST(L1Torus, TwoCharacterOracle) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    const long long k = 1 + i % 5;
    const std::vector<Complex> a{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    const InterpolationProblem p = torus_problem({0, (i % 2 ? k : -k)}, a);
    const NormResult r = compute_np_norm(p);
    const double ref = std::max(std::abs(a[0]), std::abs(a[1]));
    EXPECT_NEAR(r.lower, ref, 1e-8) << i;
    EXPECT_NEAR(r.upper, ref, 1e-8) << i;
  }
}

TEST(L1Torus, EngineCertificateRechecks) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const InterpolationProblem p =
        torus_problem({-2, 0, 3}, {Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng))});
    const NormResult r = compute_np_norm(p);
    const double bound = seqalg::dual_certificate_check(seqalg::certificate_of(r), p);
    EXPECT_GE(bound, r.certificate.dual_bound - 1e-9);
    EXPECT_LE(r.gap(), p.tolerance);
  }
}

TEST(TrivialFloor, HoldsOnEverySequenceBackend) {
  const std::vector<Complex> a{Complex(0.3, 0.9), -0.2, Complex(0.0, -0.5)};
  InterpolationProblem p;
  p.targets = a;
  const double floor = 0.3 * 0.3 + 0.81;
  p.backend = Backend::kHardy;
  p.sites = {DiscPoint{0.1}, DiscPoint{-0.4}, DiscPoint{Complex(0.0, 0.7)}};
  EXPECT_GE(compute_np_norm(p).lower, std::sqrt(floor) - 1e-9);
  p.backend = Backend::kAnalyticWiener;
  EXPECT_GE(compute_np_norm(p).lower, std::sqrt(floor) - 1e-9);
  p.backend = Backend::kWiener;
  p.sites = {CircleAngle{0.0}, CircleAngle{kPi / 2.0}, CircleAngle{kPi}};
  EXPECT_GE(compute_np_norm(p).lower, std::sqrt(floor) - 1e-9);
  p.backend = Backend::kL1Torus;
  p.sites = {IntegerCharacter{-1}, IntegerCharacter{0}, IntegerCharacter{4}};
  EXPECT_GE(compute_np_norm(p).lower, std::sqrt(floor) - 1e-9);
}

}  // namespace
}  // namespace picknorm

#include "picknorm_cli/random_problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace picknorm::cli {

std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Complex> random_targets(std::mt19937_64& rng, std::size_t n) {
  const double scale = uniform(rng, 0.1, 2.0);
  std::vector<Complex> t(n);
  for (Complex& z : t) z = random_complex(rng, scale);
  return t;
}

}  // namespace

Complex random_complex(std::mt19937_64& rng, double scale) {
  const double re = uniform(rng, -scale, scale);
  const double im = uniform(rng, -scale, scale);
  return {re, im};
}

Complex random_disc_point(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  const double a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return std::polar(r, a);
}

InterpolationProblem random_problem(Backend backend, std::mt19937_64& rng, double tolerance) {
  InterpolationProblem p;
  p.backend = backend;
  p.tolerance = tolerance;
  switch (backend) {
    case Backend::kHardy:
    case Backend::kAnalyticWiener: {
      const int n = uniform_int(rng, 1, backend == Backend::kHardy ? 5 : 4);
      for (int i = 0; i < n; ++i) p.sites.push_back(DiscPoint{random_disc_point(rng, 0.9)});
      break;
    }
    case Backend::kWiener: {
      const int period = uniform_int(rng, 2, 12);
      const int n = uniform_int(rng, 1, std::min(period, 4));
      std::vector<int> ps(static_cast<std::size_t>(period));
      std::iota(ps.begin(), ps.end(), 0);
      std::shuffle(ps.begin(), ps.end(), rng);
      for (int i = 0; i < n; ++i) {
        p.sites.push_back(CircleAngle{2.0 * std::numbers::pi * ps[static_cast<std::size_t>(i)] / period});
      }
      break;
    }
    case Backend::kL1Torus: {
      const int n = uniform_int(rng, 1, 4);
      std::vector<int> ks(13);
      std::iota(ks.begin(), ks.end(), -6);
      std::shuffle(ks.begin(), ks.end(), rng);
      for (int i = 0; i < n; ++i) p.sites.push_back(IntegerCharacter{ks[static_cast<std::size_t>(i)]});
      break;
    }
    default: {
      const int dim = uniform_int(rng, 1, 6);
      FiniteAlgebra alg;
      alg.weights.assign(static_cast<std::size_t>(dim), 1.0);
      if (backend == Backend::kFiniteSup || backend == Backend::kFiniteL1) {
        alg.norm_kind = backend == Backend::kFiniteSup ? NormKind::kWeightedSup : NormKind::kWeightedL1;
        for (double& w : alg.weights) w = uniform(rng, 1.0, 3.0);
      } else {
        alg.norm_kind = NormKind::kLp;
        alg.p = uniform_int(rng, 0, 9) == 0 ? 1.0 : uniform(rng, 1.1, 4.0);
      }
      std::vector<int> coords(static_cast<std::size_t>(dim));
      std::iota(coords.begin(), coords.end(), 1);
      std::shuffle(coords.begin(), coords.end(), rng);
      std::vector<int> sites;
      if (dim > 1 && uniform_int(rng, 0, 1) == 1) {
        // Partition subalgebra: block indicators, one representative per block.
        const int blocks = uniform_int(rng, 1, dim - 1);
        std::vector<int> block_of(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) block_of[static_cast<std::size_t>(i)] = i < blocks ? i : uniform_int(rng, 0, blocks - 1);
        std::shuffle(block_of.begin(), block_of.end(), rng);
        // Every block must be nonempty: shuffling a surjective assignment keeps it surjective.
        alg.basis.assign(static_cast<std::size_t>(blocks), std::vector<Complex>(static_cast<std::size_t>(dim)));
        std::vector<int> rep(static_cast<std::size_t>(blocks), 0);
        for (int i = 0; i < dim; ++i) {
          const auto b = static_cast<std::size_t>(block_of[static_cast<std::size_t>(i)]);
          alg.basis[b][static_cast<std::size_t>(i)] = 1.0;
          if (rep[b] == 0) rep[b] = i + 1;
        }
        const int n = uniform_int(rng, 1, std::min(blocks, 4));
        std::shuffle(rep.begin(), rep.end(), rng);
        sites.assign(rep.begin(), rep.begin() + n);
      } else {
        const int n = uniform_int(rng, 1, std::min(dim, 4));
        sites.assign(coords.begin(), coords.begin() + n);
      }
      for (int s : sites) p.sites.push_back(CoordinateIndex{s});
      p.algebra = std::move(alg);
      break;
    }
  }
  p.targets = random_targets(rng, p.sites.size());
  return p;
}

}  // namespace picknorm::cli

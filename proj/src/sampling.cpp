#include "saddlecalc/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "saddlecalc/errors.hpp"

namespace saddlecalc {
namespace {

constexpr int kHaltonPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(uint64_t index, int base) {
  double inv = 1.0 / base;
  double scale = inv;
  double value = 0.0;
  while (index > 0) {
    value += static_cast<double>(index % static_cast<uint64_t>(base)) * scale;
    index /= static_cast<uint64_t>(base);
    scale *= inv;
  }
  return value;
}

Vector normalize_or_retry(std::vector<double>& g, GaussianStream& stream) {
  while (true) {
    double sq = 0.0;
    for (double v : g) sq += v * v;
    if (sq > 1e-16) {
      const double inv = 1.0 / std::sqrt(sq);
      std::vector<double> unit(g.size());
      for (size_t i = 0; i < g.size(); ++i) unit[i] = g[i] * inv;
      return Vector(std::move(unit));
    }
    for (double& v : g) v = stream.next();
  }
}

}  // namespace

double GaussianStream::next() {
  if (cached) {
    cached = false;
    return cache;
  }
  const double u1 = rng.next_open_unit();
  const double u2 = rng.next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  cache = r * std::sin(a);
  cached = true;
  return r * std::cos(a);
}

std::vector<Vector> sample_sphere(const SphereSampler& sampler) {
  if (sampler.dim < 1) throw DimensionMismatch("sampler dimension must be >= 1");
  if (sampler.count < 1) throw DimensionMismatch("sampler count must be >= 1");

  std::vector<Vector> out;
  out.reserve(static_cast<size_t>(sampler.count));

  switch (sampler.scheme) {
    case SphereScheme::kAngularGrid: {
      if (sampler.dim != 2) {
        throw DimensionMismatch("angular grid sampling requires dimension 2");
      }
      for (int k = 0; k < sampler.count; ++k) {
        const double a = 2.0 * std::numbers::pi * k / sampler.count;
        out.push_back(Vector({std::cos(a), std::sin(a)}));
      }
      return out;
    }
    case SphereScheme::kUniformRandom: {
      GaussianStream stream(sampler.seed);
      for (int k = 0; k < sampler.count; ++k) {
        std::vector<double> g(static_cast<size_t>(sampler.dim));
        for (double& v : g) v = stream.next();
        out.push_back(normalize_or_retry(g, stream));
      }
      return out;
    }
    case SphereScheme::kLowDiscrepancy: {
      // Halton points feed Box-Muller pairwise; an odd dimension uses
      // one extra Halton coordinate per sample.
      const int gaussians = sampler.dim + (sampler.dim % 2);
      if (gaussians > static_cast<int>(std::size(kHaltonPrimes))) {
        throw DimensionMismatch(
            "low-discrepancy sampling supports dimension <= " +
            std::to_string(std::size(kHaltonPrimes)));
      }
      GaussianStream fallback(sampler.seed ^ 0x5bf03635u);
      const uint64_t start = 1 + sampler.seed % 9973;
      for (int k = 0; k < sampler.count; ++k) {
        const uint64_t index = start + static_cast<uint64_t>(k);
        std::vector<double> g(static_cast<size_t>(sampler.dim));
        for (int pair = 0; pair < gaussians / 2; ++pair) {
          double u1 = radical_inverse(index, kHaltonPrimes[2 * pair]);
          const double u2 = radical_inverse(index, kHaltonPrimes[2 * pair + 1]);
          if (u1 <= 0.0) u1 = 0x1.0p-53;
          const double r = std::sqrt(-2.0 * std::log(u1));
          const double a = 2.0 * std::numbers::pi * u2;
          const int d = 2 * pair;
          g[static_cast<size_t>(d)] = r * std::cos(a);
          if (d + 1 < sampler.dim) g[static_cast<size_t>(d) + 1] = r * std::sin(a);
        }
        out.push_back(normalize_or_retry(g, fallback));
      }
      return out;
    }
  }
  throw DimensionMismatch("unknown sphere sampling scheme");
}

SphereSampler default_sphere_cover(int dim) {
  SphereSampler s;
  s.dim = dim;
  s.count = dim <= 3 ? 2048 : 4096 * dim;
  s.seed = 0;
  s.scheme = SphereScheme::kLowDiscrepancy;
  return s;
}

DCPair random_dc(uint64_t seed, int dim, int max_plus, int max_minus,
                 double coord_bound) {
  if (dim < 1 || max_plus < 1 || max_minus < 1 || coord_bound <= 0.0) {
    throw DimensionMismatch("random_dc requires positive sizes, dimension and bound");
  }
  SplitMix64 rng(seed);
  const int np = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(max_plus));
  const int nm = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(max_minus));
  auto draw = [&](int count) {
    std::vector<Vector> pts;
    pts.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
      std::vector<double> c(static_cast<size_t>(dim));
      for (double& v : c) v = rng.next_symmetric(coord_bound);
      pts.push_back(Vector(std::move(c)));
    }
    return PointSet(std::move(pts));
  };
  PointSet plus = draw(np);
  PointSet minus = draw(nm);
  return DCPair(MaxOfLinear(std::move(plus)), MaxOfLinear(std::move(minus)));
}

FamilyExtrema brute_force_extrema(const SaddleFamily& F,
                                  const SphereSampler& sampler) {
  if (F.dim() != sampler.dim) {
    throw DimensionMismatch("extrema sampler dimension " +
                            std::to_string(sampler.dim) + " vs family dimension " +
                            std::to_string(F.dim()));
  }
  const std::vector<Vector> pts = sample_sphere(sampler);
  FamilyExtrema out;
  bool first = true;
  for (const Vector& x : pts) {
    const double v = eval_infsup(F, x);
    if (first || v < out.min_value) {
      out.min_value = v;
      out.min_point = x;
    }
    if (first || v > out.max_value) {
      out.max_value = v;
      out.max_point = x;
    }
    first = false;
  }
  return out;
}

}  // namespace saddlecalc

#ifndef SADDLECALC_SAMPLING_HPP
#define SADDLECALC_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "saddlecalc/phfunc.hpp"
#include "saddlecalc/vector.hpp"

namespace saddlecalc {

// SplitMix64 (Steele, Lea, Flood 2014): the fixed 64-bit shift-xor
// generator behind every randomized routine in the library, so results
// reproduce bit-for-bit across platforms. Reference outputs are pinned
// in the test suite and listed in the README.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a logarithm argument.
  double next_open_unit() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform in [-bound, bound].
  double next_symmetric(double bound) { return bound * (2.0 * next_unit() - 1.0); }
};

// Standard Gaussians by Box-Muller on top of SplitMix64, pairs consumed
// eagerly so the draw count is deterministic.
struct GaussianStream {
  SplitMix64 rng;
  bool cached = false;
  double cache = 0.0;

  explicit GaussianStream(uint64_t seed) : rng(seed) {}
  double next();
};

enum class SphereScheme { kUniformRandom, kLowDiscrepancy, kAngularGrid };

// Deterministic generator of unit-norm sample points. The angular grid
// covers [0, 2pi) uniformly and exists only for dim = 2; the
// low-discrepancy scheme runs Box-Muller over a Halton sequence whose
// start index is derived from the seed.
struct SphereSampler {
  int dim = 2;
  int count = 0;
  uint64_t seed = 0;
  SphereScheme scheme = SphereScheme::kUniformRandom;
};

std::vector<Vector> sample_sphere(const SphereSampler& sampler);

// Sampler used when an operation needs a sphere cover but the caller
// did not supply one: 2048 low-discrepancy points up to dim 3, 4096*dim
// beyond, seed 0.
SphereSampler default_sphere_cover(int dim);

// A reproducible DC instance: generator counts are drawn uniformly from
// {1, ..., max_plus} and {1, ..., max_minus}, coordinates uniformly from
// [-coord_bound, coord_bound].
DCPair random_dc(uint64_t seed, int dim, int max_plus, int max_minus,
                 double coord_bound);

struct FamilyExtrema {
  Vector min_point;
  double min_value = 0.0;
  Vector max_point;
  double max_value = 0.0;
};

// Exhaustive min/max of eval_infsup over the sample set; ties keep the
// earliest sample.
FamilyExtrema brute_force_extrema(const SaddleFamily& F,
                                  const SphereSampler& sampler);

}  // namespace saddlecalc

#endif  // SADDLECALC_SAMPLING_HPP

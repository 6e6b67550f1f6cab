#ifndef NILORBIT_RNG_HPP
#define NILORBIT_RNG_HPP

#include <cstdint>

#include "nilorbit/rational.hpp"

namespace nilorbit {

/// Deterministic generator used for every seeded sweep in the library.
/// SplitMix64 is fixed here (not std::mt19937 + distributions) so that
/// sampled values are bit-identical across platforms and standard
/// libraries; reports echo the seed and are replayable.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) by modulo. The tiny modulo bias is
  /// irrelevant here: draws only seed exact test points.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

/// Small-height rational scheme: numerator in [-8, 8], denominator in
/// [1, 8], reduced. Heights stay small so products through degree-6
/// brackets remain cheap while exercising non-integer arithmetic.
inline Rational random_small_rational(SplitMix64& rng) {
  const long num = static_cast<long>(rng.below(17)) - 8;
  const long den = static_cast<long>(rng.below(8)) + 1;
  return rat(num, den);
}

inline RatVec random_small_vector(SplitMix64& rng, std::size_t n) {
  RatVec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_small_rational(rng));
  return v;
}

/// Per-task seed derivation for parallel sweeps: task i uses an
/// independent stream so results do not depend on scheduling order.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t task) {
  SplitMix64 mix(seed ^ (0xA0761D6478BD642FULL + task * 0xE7037ED1A0B428DBULL));
  mix.next();
  return mix;
}

} // namespace nilorbit

#endif

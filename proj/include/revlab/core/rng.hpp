#pragma once

#include <cstdint>
#include <random>

#include "revlab/core/bitstring.hpp"

namespace revlab {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seeded generator with platform-independent derived distributions.
/// std::mt19937_64 output is fixed by the standard; the std distributions
/// are not, so bounded integers and reals are derived here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  bool bit() { return (engine_() >> 63) != 0; }
  /// Uniform on [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }
  BitString bits(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the result exactly uniform.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

inline BitString Rng::bits(std::size_t n) {
  BitString out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, bit());
  return out;
}

}  // namespace revlab

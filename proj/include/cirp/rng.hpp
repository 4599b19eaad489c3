#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "cirp/common.hpp"

namespace cirp {

/// splitmix64 step; used both as a mixer and to expand seeds into state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent substream seed from a master seed and a list of
/// stream tags (channel index, scheme id, ...). Pure counter-based mixing,
/// so substreams are reproducible regardless of evaluation order or thread
/// count.
inline std::uint64_t substream_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  for (std::uint64_t tag : tags) {
    s = h ^ (tag + 0x9e3779b97f4a7c15ULL);
    h = splitmix64(s);
  }
  return h;
}

/// xoshiro256++ with explicit state expansion from a 64-bit seed.
/// Self-contained so that streams are bit-reproducible across platforms,
/// unlike the distributions in <random>.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in (0, 1); never returns 0 so it is safe inside log().
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller. Caches the second deviate.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Complex circular Gaussian with E|z|^2 = 1 (real/imag variance 1/2).
  cplx next_cnormal() {
    static constexpr double kInvSqrt2 = 0.70710678118654752440;
    const double re = next_normal();
    const double im = next_normal();
    return {kInvSqrt2 * re, kInvSqrt2 * im};
  }

  /// Uniform integer in [0, bound) by rejection (unbiased).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace cirp

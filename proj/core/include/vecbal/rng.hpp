#pragma once

#include <cmath>
#include <cstdint>

namespace vecbal {

// Name recorded in experiment reports so runs can be reproduced bit-for-bit.
inline constexpr const char* kRngName = "splitmix64";

// SplitMix64 (Vigna 2015): 64 bits of state advanced by a Weyl increment and
// finalized with a multiply-xorshift mixer. Passes BigCrush. Independent
// streams are derived by hashing a (state, domain, index) triple through the
// same mixer, which is how balancers, per-coordinate Gaussian draws, rerun
// rounds and dyadic scales get decorrelated randomness from one user seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double uniform_pos() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. Consumes exactly two uniforms and
  // returns one variate, so draw sequences stay easy to reason about.
  double normal() {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double radius = std::sqrt(-2.0 * std::log(uniform_pos()));
    return radius * std::cos(kTwoPi * uniform01());
  }

  // Child stream keyed by (domain, index). Does not advance this generator,
  // so a generator used only as a fork root is a stable stream identity.
  Rng fork(std::uint64_t domain, std::uint64_t index = 0) const {
    std::uint64_t h = state_;
    h = mix(h ^ (0x9E3779B97F4A7C15ULL * (domain + 1)));
    h = mix(h ^ (0xBF58476D1CE4E5B9ULL * (index + 1)));
    return Rng(h);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace vecbal

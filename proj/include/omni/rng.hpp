#pragma once

#include <cmath>
#include <cstdint>

#include "omni/angles.hpp"

namespace omni {

// Deterministic random stream. All distributions are spelled out here (no
// std::*_distribution) so that identical seeds give identical samples on
// every platform and toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {
    // splitmix warmup so that small seeds do not start in a weak state
    next_u64();
    next_u64();
  }

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Zero-mean Gaussian via Box-Muller.
  double normal(double sigma) {
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  // Derives an independent child stream; used to fan one scenario seed out to
  // per-module and per-trial streams that stay reproducible in isolation.
  Rng derive(std::uint64_t stream) const {
    std::uint64_t z = seed_ ^ (0x632BE59BD9B4E019ull + 0x9E3779B97F4A7C15ull * (stream + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace omni

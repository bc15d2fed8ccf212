// Counter-based pseudo-random streams with hand-rolled draws, so trajectories
// are bit-identical for a given (seed, stream, substream) on every platform.
#pragma once

#include <cstdint>
#include <vector>

namespace netform {

// splitmix64 finalizer; the engine below walks its Weyl sequence, which makes
// the n-th output a pure function of (key, n).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  Rng() : Rng(0, 0, 0) {}
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
    // Key derivation: fold the three identifiers through the finalizer so
    // nearby (seed, stream) pairs land on unrelated sequences.
    std::uint64_t k = mix64(seed + 0x9E3779B97F4A7C15ull);
    k = mix64(k ^ (stream + 0xD1B54A32D192ED03ull));
    k = mix64(k ^ (substream + 0x8CB92BA72F3D8DD7ull));
    state_ = k;
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Unbiased uniform integer in [0, n); n >= 1.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Categorical draw over cumulative shares (last entry ~ 1.0).
  std::size_t categorical(const std::vector<double>& cumulative) {
    const double u = next_double();
    for (std::size_t k = 0; k + 1 < cumulative.size(); ++k) {
      if (u < cumulative[k]) return k;
    }
    return cumulative.size() - 1;
  }

 private:
  std::uint64_t state_;
};

}  // namespace netform

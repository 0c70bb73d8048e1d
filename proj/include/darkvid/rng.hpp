#pragma once

#include <cmath>
#include <cstdint>

namespace darkvid {

// splitmix64 generator. Chosen because the whole pipeline must be
// reproducible bit-for-bit from a single integer seed, and splitmix64 is
// trivial to port. Identical seed => identical stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform real in [0,1): top 53 bits of the next output.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in {0, ..., n-1} via floor(u*n). Requires n >= 1.
  int next_int(int n) {
    int v = static_cast<int>(next_uniform() * n);
    return v < n ? v : n - 1;
  }

  // Standard normal via Box-Muller; consumes two uniforms per call.
  double next_normal() {
    double u1 = next_uniform();
    double u2 = next_uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::uint64_t state_;
};

// Seed for a worker-local stream; streams for different indices are
// independent for practical purposes because splitmix64 scrambles state.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return base ^ index;
}

}  // namespace darkvid

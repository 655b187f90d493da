#pragma once

#include <cmath>
#include <cstdint>

namespace vexp {

// splitmix64. Randomized suites derive one generator per case from a root
// seed and the case counter, so results do not depend on scheduling or on
// platform library distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
  }

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

/// Counter-based per-case seed derivation from a root seed.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t case_index) {
  SplitMix64 mix(root ^ (0x9E3779B97F4A7C15ULL * (case_index + 1)));
  return mix.next();
}

inline SplitMix64 case_rng(std::uint64_t root, std::uint64_t case_index) {
  return SplitMix64(derive_seed(root, case_index));
}

}  // namespace vexp

#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace fer {

/// Deterministic 64-bit PRNG (splitmix64). Used everywhere a seeded draw is
/// needed so results are identical across platforms and standard libraries;
/// std::uniform_real_distribution is implementation-defined and is avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi). A zero-width interval returns lo exactly.
  double uniform(double lo, double hi) {
    if (lo == hi) return lo;
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  bool next_bool() { return (next_u64() & 1ULL) != 0; }

  /// Standard normal via Box-Muller on two uniform draws.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// FNV-1a 64-bit hash of a byte string. Stable across platforms; used for
/// spec digests and per-record seed derivation.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t h = 0xCBF29CE484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Derives an independent stream seed from a master seed, a string key and an
/// index. The derivation is pure, so work partitioned across any number of
/// workers draws the same values for the same (key, index).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view key,
                                 std::uint64_t index) {
  std::uint64_t h = fnv1a64(key);
  h ^= master + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  h ^= index + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  Rng mix(h);
  return mix.next_u64();
}

}  // namespace fer

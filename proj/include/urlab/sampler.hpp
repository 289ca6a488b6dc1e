#pragma once

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "urlab/rational.hpp"

namespace urlab {

/// Fixed default seed; published tables are produced with it. URLAB_SEED overrides it.
inline constexpr std::uint64_t kDefaultSeed = 1729;

inline std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed) {
  if (const char* env = std::getenv("URLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      return fallback;
    }
  }
  return fallback;
}

/// Deterministic stream keyed by a base seed and a parameter tuple.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::initializer_list<std::int64_t> key) : engine_(make_seq(seed, key)) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  long nonzero_integer(long lo, long hi) {
    for (;;) {
      if (const long v = integer(lo, hi); v != 0) {
        return v;
      }
    }
  }

  /// p/q with |p| <= 5 and 1 <= q <= 4.
  Rational small_rational() {
    const long p = integer(-5, 5);
    const long q = integer(1, 4);
    return Rational(p, q);
  }

  Rational nonzero_small_rational() {
    for (;;) {
      if (Rational r = small_rational(); !r.is_zero()) {
        return r;
      }
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::mt19937_64 make_seq(std::uint64_t seed, std::initializer_list<std::int64_t> key) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (const auto k : key) {
      const auto u = static_cast<std::uint64_t>(k);
      words.push_back(static_cast<std::uint32_t>(u));
      words.push_back(static_cast<std::uint32_t>(u >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
  }

  std::mt19937_64 engine_;
};

}  // namespace urlab

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace infmax {

/// 64-bit avalanche mix (splitmix64 finalizer). Used to derive independent
/// deterministic streams from a master seed and integer tags.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag) {
  return mix64(seed ^ mix64(tag));
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag_a,
                                   std::uint64_t tag_b) {
  return derive_stream(derive_stream(seed, tag_a), tag_b);
}

/// Maps a 64-bit hash to [0, 1).
inline double unit_from_bits(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Stateless per-key uniform draw: a virtual table of independent coins
/// indexed by key. Two lookups with the same (seed, key) always agree, so a
/// cascade that consults it behaves as if all its coins were pre-drawn.
inline double keyed_unit(std::uint64_t seed, std::uint64_t key) {
  return unit_from_bits(derive_stream(seed, key));
}

/// Sequential RNG for parameter assignment and sampling. Thin wrapper so the
/// engine choice lives in one place.
class SequentialRng {
 public:
  explicit SequentialRng(std::uint64_t seed) : engine_(mix64(seed)) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double standard_normal() {
    return std::normal_distribution<double>(0.0, 1.0)(engine_);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

/// Order-independent reduction: sums slots pairwise so the result does not
/// depend on how the slots were filled across worker threads.
inline double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.subspan(0, half)) +
         pairwise_sum(values.subspan(half));
}

}  // namespace infmax

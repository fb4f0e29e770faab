#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace catpop {

// Counter-free substream RNG: one engine per (seed, stream_id) pair.
// Identical pairs give bit-identical draw sequences; distinct stream_ids are
// decorrelated through a splitmix64 hash, so replicas can draw concurrently
// without shared state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : engine_(mix(seed, stream_id)) {}

  // Strictly inside (0,1): odd multiples of 2^-53, never 0 or 1.
  double uniform01() {
    const std::uint64_t bits = engine_();
    return static_cast<double>(((bits >> 12) << 1) | 1ULL) * 0x1.0p-53;
  }

  // Success with probability p; p=1 always succeeds, p=0 never does.
  bool bernoulli(double p) { return uniform01() < p; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  static constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  static constexpr std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_id) {
    return splitmix64(splitmix64(seed) ^ splitmix64(~stream_id));
  }

  std::mt19937_64 engine_;
};

}  // namespace catpop

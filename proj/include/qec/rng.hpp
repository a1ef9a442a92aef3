#pragma once

#include <cstdint>

namespace qec {

// SplitMix64 finalizer; also used to derive child seeds from (seed, index)
// so that streams are reproducible independent of scheduling.
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  return mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

// Counter-based stream: the SplitMix64 sequence for one derived seed.
// Distinct streams may be used concurrently; one stream must not be shared
// across threads.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : state_(seed) {}
  RngStream(uint64_t master_seed, uint64_t index) : state_(derive_seed(master_seed, index)) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., bound-1}; bound must be nonzero.
  uint64_t next_below(uint64_t bound) {
    // Rejection-free multiply-shift; bias is negligible for desk-scale bounds.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    return static_cast<uint64_t>(m >> 64);
  }

 private:
  uint64_t state_;
};

}  // namespace qec

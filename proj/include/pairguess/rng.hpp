#pragma once

#include <cstdint>

namespace pairguess {

// Counter-based random stream built on the splitmix64 finalizer.
//
// substream(seed, index) derives an independent stream for each index, so
// work split by index across threads draws exactly the same numbers as a
// serial loop over the indices. Streams are cheap value types.
class SplitStream {
 public:
  explicit SplitStream(std::uint64_t seed) : state_(mix(seed + GOLDEN)) {}

  // Stream number `index` under `seed`. Used one-per-round and
  // one-per-restart; the double mix decorrelates nearby indices.
  static SplitStream substream(std::uint64_t seed, std::uint64_t index) {
    SplitStream s(seed);
    s.state_ = mix(s.state_ + mix(index + GOLDEN));
    return s;
  }

  std::uint64_t next_u64() {
    state_ += GOLDEN;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace pairguess

#pragma once

#include <cstdint>

namespace burstyic {

// Counter-based generator (splitmix64). State update: s += 0x9E3779B97F4A7C15;
// output = mix(s) with the Stafford mix13 finalizer. Streams for parallel
// trials are derived from (seed, stream index) so trial order never matters.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    // Decorrelate streams by running the index through one mix round.
    SplitMix64 r(seed ^ mix(index + 0x6A09E667F3BCC909ull));
    return r;
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  int bit() { return static_cast<int>(next_u64() >> 63); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace burstyic

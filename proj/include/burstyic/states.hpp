#pragma once

#include <cstdint>
#include <vector>

#include "burstyic/core.hpp"

namespace burstyic {

// Realized interference-state bits for K coherence blocks.
struct StateSequence {
  std::vector<std::uint8_t> b1;
  std::vector<std::uint8_t> b2;

  int K() const { return static_cast<int>(b1.size()); }
};

// Block-i.i.d. Bernoulli(p) states; identical sequences when FullyCorrelated.
StateSequence sample_states(const ChannelConfig& cfg, int K, std::uint64_t seed);

}  // namespace burstyic

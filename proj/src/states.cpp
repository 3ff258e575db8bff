#include "burstyic/states.hpp"

#include "burstyic/rng.hpp"

namespace burstyic {

StateSequence sample_states(const ChannelConfig& cfg, int K, std::uint64_t seed) {
  cfg.validate();
  if (K < 1) throw std::invalid_argument("sample_states: K must be positive");
  StateSequence s;
  s.b1.resize(K);
  s.b2.resize(K);
  SplitMix64 rng = SplitMix64::stream(seed, 0);
  for (int k = 0; k < K; ++k) {
    s.b1[k] = rng.bernoulli(cfg.p) ? 1 : 0;
    s.b2[k] = cfg.correlation == Correlation::FullyCorrelated
                  ? s.b1[k]
                  : (rng.bernoulli(cfg.p) ? 1 : 0);
  }
  return s;
}

}  // namespace burstyic

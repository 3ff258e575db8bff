#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "burstyic/core.hpp"
#include "burstyic/states.hpp"

namespace burstyic {

enum class QsScheme { VWI_opportunistic, WI_opportunistic };
enum class LocalScheme { S1_vwi_wi_mi, S2_wi_highp, S3_si };
enum class GlobalScheme { G_MI, G_SI };

struct SimOutcome {
  bool decoded_ok = true;
  long long bits_user1 = 0;
  long long bits_user2 = 0;
  long long channel_uses = 0;
  double empirical_sum_rate = 0.0;
  std::map<std::string, long> state_counts;  // keys "00","01","10","11"

  long coded_rows_total = 0;   // erasure-decode attempts (local schemes)
  long coded_rows_failed = 0;

  double target_sum_rate = 0.0;    // closed-form sum-rate target
  double adjusted_target = 0.0;    // margin/residual-adjusted target
};

// Quasi-static opportunistic schemes, one fixed state pair for the whole
// codeword of K blocks. Worst-case bits decode in every state; opportunistic
// bits of user i decode exactly when b_i = 0.
SimOutcome run_scheme_qs(const ChannelConfig& cfg, QsScheme scheme, int b1, int b2,
                         std::uint64_t seed, int K = 1,
                         std::ostream* transcript = nullptr);

// Ergodic local-CSIR schemes: uncoded rows plus random linear codes decoded
// by treating interfered blocks as erasures; coded rows use rate
// (1-p)(1-margin).
SimOutcome run_scheme_local(const ChannelConfig& cfg, LocalScheme scheme, int K,
                            std::uint64_t seed, double margin,
                            std::ostream* transcript = nullptr);

// Ergodic global-CSIRT copy/cancel schemes. The whole state sequence is known
// to everyone before transmission; decoding is deterministic and exact.
SimOutcome run_scheme_global(const ChannelConfig& cfg, GlobalScheme scheme, int K,
                             std::uint64_t seed,
                             const std::optional<StateSequence>& forced_states = std::nullopt,
                             std::ostream* transcript = nullptr);

}  // namespace burstyic

#pragma once

#include "burstyic/csirt.hpp"

namespace burstyic {

// Exact per-user rates (1/T) I(X_i; Y_i | B_i) for the parametrized input
// distributions, computed by enumerating the joint pmf of each independent
// level-group and summing width-weighted mutual informations. Shares no
// entropy algebra with csirt_rate_pair.
RatePair mi_oracle(const ChannelConfig& cfg, const CsirtParams& params);

// H(Xt | X) for a bit pair with P(equal) = eta, by pmf enumeration.
double pair_conditional_entropy(double eta);

}  // namespace burstyic

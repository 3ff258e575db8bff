#pragma once

#include "burstyic/csirt.hpp"

namespace burstyic {

struct CsirtOptimum {
  CsirtParams params;
  double sum = 0.0;
  long evaluations = 0;
};

// Maximize r1 + r2 of the parametric family over the parameter box.
// Deterministic for fixed (cfg, budget): coarse grid under the p=q symmetry,
// then coordinate-wise golden-section refinement; a full asymmetric pass runs
// when alpha = 1 or the symmetric optimum sits on a box edge. On a shared
// subregion endpoint both neighbours are optimized and the best kept.
CsirtOptimum optimize_csirt(const ChannelConfig& cfg, long budget);

}  // namespace burstyic

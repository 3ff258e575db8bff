#pragma once

#include <vector>

#include "burstyic/core.hpp"
#include "burstyic/entropy.hpp"

namespace burstyic {

// The nine parametrized sub-intervals of alpha for the local-CSIRT
// achievability family. Endpoints are shared; at a shared endpoint both
// neighbours are valid and the better rate wins.
enum class Subregion {
  WI,    // (1/2, 2/3]
  MI_a,  // (2/3, 3/4]
  MI_b,  // [3/4, 4/5]
  MI_c,  // [4/5, 6/7]
  MI_d,  // [6/7, 1]
  SI_a,  // (1, 6/5]
  SI_b,  // [6/5, 4/3]
  SI_c,  // [4/3, 3/2]
  SI_d,  // [3/2, 2]
};

const char* subregion_name(Subregion s);

// Number of free probabilities in [0,1/2] (low) and [1/2,1] (high).
int subregion_low_count(Subregion s);
int subregion_high_count(Subregion s);

// Sub-intervals containing alpha = nc/nd (one, or two at a shared endpoint).
std::vector<Subregion> subregions_for(const ChannelConfig& cfg);

// Free parameters of one subregion's rate formula.
//
// low layout:  WI, SI_a..SI_c: [p1 p2 q1 q2]
//              MI_a/MI_b:      [p1 p2 pt1 pt2 ph1 q1 q2 qt1 qt2 qh1]
//              MI_c/MI_d:      [p1 p2 ph1 q1 q2 qh1]
//              SI_d:           []
// high layout: MI_a/MI_b, SI_b..SI_d: [eta1 gamma1]
//              MI_c/MI_d, SI_a:       [eta1 etap gamma1 gammap]
struct CsirtParams {
  Subregion subregion = Subregion::WI;
  std::vector<double> low;
  std::vector<double> high;

  void validate() const;
  // Swap the user-1 and user-2 parameter blocks.
  CsirtParams swapped() const;
  static CsirtParams symmetric_point(Subregion s);
};

struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;
  double sum() const { return r1 + r2; }
};

// The SI (1,6/5] user-2 rate has two printed readings of one mixed term; the
// Matched variant pairs the H_sum argument with H_b(p3) consistently and is
// the one the exact-MI enumeration reproduces.
enum class Eq45Variant { Matched, AsPrinted };

RatePair csirt_rate_pair(const ChannelConfig& cfg, const CsirtParams& params,
                         Eq45Variant variant = Eq45Variant::Matched);

}  // namespace burstyic

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace burstyic {

enum class Correlation { Independent, FullyCorrelated };

enum class Timing { QuasiStatic, Ergodic };
enum class Csi { LocalCSIR, LocalCSIRT, GlobalCSIRT };

struct Setting {
  Timing timing = Timing::Ergodic;
  Csi csi = Csi::LocalCSIR;
};

// Symmetric two-user channel: n_d direct-link and n_c cross-link sub-channels,
// interference active with probability p per coherence block of T symbols.
struct ChannelConfig {
  int nd = 1;
  int nc = 0;
  double p = 0.0;
  int T = 1;
  Correlation correlation = Correlation::Independent;

  void validate() const {
    if (nd < 0 || nc < 0) throw std::invalid_argument("nd/nc must be nonnegative");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
    if (T < 1) throw std::invalid_argument("T must be positive");
  }

  int q() const { return std::max(nd, nc); }

  double alpha() const {
    if (nd == 0) throw std::domain_error("alpha undefined for nd = 0");
    return static_cast<double>(nc) / static_cast<double>(nd);
  }
};

// Interference regions by alpha = nc/nd, upper endpoints inclusive.
enum class Region { VWI, WI, MI, SI, VSI };

inline Region classify_region(const ChannelConfig& cfg) {
  if (cfg.nd == 0) throw std::domain_error("region undefined for nd = 0");
  // Integer comparisons keep the half-open boundaries exact.
  const long nd = cfg.nd, nc = cfg.nc;
  if (2 * nc <= nd) return Region::VWI;
  if (3 * nc <= 2 * nd) return Region::WI;
  if (nc <= nd) return Region::MI;
  if (nc <= 2 * nd) return Region::SI;
  return Region::VSI;
}

inline const char* region_name(Region r) {
  switch (r) {
    case Region::VWI: return "VWI";
    case Region::WI: return "WI";
    case Region::MI: return "MI";
    case Region::SI: return "SI";
    case Region::VSI: return "VSI";
  }
  return "?";
}

inline const char* csi_name(Csi c) {
  switch (c) {
    case Csi::LocalCSIR: return "csir";
    case Csi::LocalCSIRT: return "csirt";
    case Csi::GlobalCSIRT: return "global";
  }
  return "?";
}

inline const char* timing_name(Timing t) {
  return t == Timing::QuasiStatic ? "qs" : "ergodic";
}

inline const char* correlation_name(Correlation c) {
  return c == Correlation::Independent ? "ind" : "full";
}

}  // namespace burstyic

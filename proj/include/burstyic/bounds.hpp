#pragma once

#include <map>
#include <string>

#include "burstyic/core.hpp"

namespace burstyic {

enum class BoundKind { Converse, Achievable, Exact };

// A sum-rate value in bits/channel-use plus provenance.
struct RateBound {
  double value = 0.0;
  BoundKind kind = BoundKind::Exact;
  std::string source;
};

inline const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::Converse: return "converse";
    case BoundKind::Achievable: return "achievable";
    case BoundKind::Exact: return "exact";
  }
  return "?";
}

// Worst-case sum rate plus the per-state opportunistic increments. Keys are
// the realizable joint-state labels; "11" is always present and zero.
struct OpportunisticRates {
  double R = 0.0;
  std::map<std::string, double> deltas;
};

struct StatePmf {
  double p00 = 0, p01 = 0, p10 = 0, p11 = 0;
  void validate() const;
};

// (nd-nc)^+ + max(nd,nc), the one-interfered-receiver bound.
inline double sum_bound_single(int nd, int nc) {
  return static_cast<double>(std::max(nd - nc, 0) + std::max(nd, nc));
}
// 2 max{(nd-nc)^+, nc}, the both-interfered bound.
inline double sum_bound_double(int nd, int nc) {
  return 2.0 * std::max(std::max(nd - nc, 0), nc);
}

// Sum capacity of the non-bursty deterministic IC (the W-curve).
RateBound nonbursty_sum_capacity(int nd, int nc);

// Worst-case sum capacity of the quasi-static bursty IC; CSI- and
// correlation-independent.
RateBound qs_worst_case_capacity(const ChannelConfig& cfg);

// Max-worst-case-rate corner of the opportunistic sum-capacity region.
OpportunisticRates qs_opportunistic(const ChannelConfig& cfg, const Setting& setting);

// Membership test for a candidate (R, deltas) tuple against the full
// inequality system of the opportunistic region (valid for any state pmf with
// p00 < 1 and, for the 01/10 bounds, p01,p10 > 0).
bool qs_opportunistic_feasible(const ChannelConfig& cfg, const Setting& setting,
                               double R, const std::map<std::string, double>& deltas,
                               double tol = 1e-9);

// Ergodic converse for the (csi, correlation) pair.
RateBound ergodic_converse(const ChannelConfig& cfg, const Setting& setting);

// Ergodic achievable rate. For LocalCSIRT this maximizes the parametric
// rate family with the given evaluation budget and takes the max with the
// LocalCSIR value.
RateBound ergodic_achievable(const ChannelConfig& cfg, const Setting& setting,
                             long csirt_budget = 20000);

enum class NamedCorner { C_LMI, C_LSI, C_GMI, C_GSI };

double named_corner(const ChannelConfig& cfg, NamedCorner which);

// Average sum capacity of the quasi-static channel (send many codewords over
// independent quasi-static realizations).
RateBound average_sum_capacity(const ChannelConfig& cfg, const Setting& setting);

// Sum capacity with noiseless delayed feedback, fully correlated states.
RateBound feedback_capacity(const ChannelConfig& cfg);

// Global-CSIRT ergodic converse for an arbitrary joint state pmf.
RateBound generalized_global_converse(int nd, int nc, const StatePmf& pmf);

// True when the ergodic converse and achievable bounds provably coincide for
// this configuration (the bold-face entries of the summary tables).
bool ergodic_is_tight(const ChannelConfig& cfg, const Setting& setting);

}  // namespace burstyic

#include "burstyic/bounds.hpp"

#include <cmath>

#include "burstyic/csirt_optimize.hpp"

namespace burstyic {

namespace {

double eq23_ub_tk(const ChannelConfig& c) {
  const double p = c.p;
  return 2.0 * (1.0 - p) / (1.0 + p) * c.nd + 2.0 * p / (1.0 + p) * sum_bound_single(c.nd, c.nc);
}

double eq24_ub_wang(const ChannelConfig& c) {
  const double p = c.p;
  const double sp = sum_bound_single(c.nd, c.nc);
  const double mx = 0.5 * sum_bound_double(c.nd, c.nc);
  if (p <= 0.5) return 2.0 * (1.0 - 2.0 * p) * c.nd + 2.0 * p * sp;
  return 2.0 * (1.0 - p) * sp + 2.0 * (2.0 * p - 1.0) * mx;
}

double eq59_global(const ChannelConfig& c) {
  return 2.0 * (1.0 - c.p) * c.nd + c.p * sum_bound_single(c.nd, c.nc);
}

double eq60_global(const ChannelConfig& c) {
  const double p = c.p;
  const double sp = sum_bound_single(c.nd, c.nc);
  const double mx = 0.5 * sum_bound_double(c.nd, c.nc);
  return 2.0 * (p * (1.0 - p) * sp + (1.0 - p) * (1.0 - p) * c.nd + p * p * mx);
}

double eq67_global_corr(const ChannelConfig& c) {
  const double mx = 0.5 * sum_bound_double(c.nd, c.nc);
  return 2.0 * ((1.0 - c.p) * c.nd + c.p * mx);
}

double eq25_local_achievable(const ChannelConfig& c) {
  const double p = c.p;
  const double sp = sum_bound_single(c.nd, c.nc);
  const double mx = 0.5 * sum_bound_double(c.nd, c.nc);
  if (p <= 0.5) return 2.0 * (1.0 - 2.0 * p) * c.nd + 2.0 * p * sp;
  return std::min(sp, 2.0 * (1.0 - p) * sp + 2.0 * (2.0 * p - 1.0) * mx);
}

double pmin_of(double p) { return std::min(p * p, p * (1.0 - p)); }

double eq61_global_ach_vwi_wi(const ChannelConfig& c) {
  const double p = c.p;
  const double mx = 0.5 * sum_bound_double(c.nd, c.nc);
  return 2.0 * (p * (1.0 - p) * (2.0 * c.nd - c.nc) + (1.0 - p) * (1.0 - p) * c.nd + p * p * mx);
}

double eq62_global_ach_mi(const ChannelConfig& c) {
  const double p = c.p, pm = pmin_of(p);
  return 4.0 * c.nd * pm + 2.0 * c.nd * (1.0 - p) * (1.0 - p) +
         (2.0 * c.nd - c.nc) * (2.0 * p - p * p - 3.0 * pm);
}

double eq63_global_ach_si(const ChannelConfig& c) {
  const double p = c.p, pm = pmin_of(p);
  return 2.0 * (c.nd + c.nc) * pm + 2.0 * c.nd * (1.0 - p) * (1.0 - p) +
         c.nc * (2.0 * p - p * p - 3.0 * pm);
}

double eq69_global_corr_ach_mi_si(const ChannelConfig& c) {
  return 2.0 * (1.0 - c.p) * c.nd + c.p * sum_bound_single(c.nd, c.nc);
}

}  // namespace

void StatePmf::validate() const {
  if (p00 < 0 || p01 < 0 || p10 < 0 || p11 < 0)
    throw std::domain_error("StatePmf: negative entry");
  if (std::fabs(p00 + p01 + p10 + p11 - 1.0) > 1e-12)
    throw std::domain_error("StatePmf: entries must sum to 1");
}

RateBound nonbursty_sum_capacity(int nd, int nc) {
  if (nd < 0 || nc < 0) throw std::invalid_argument("nonbursty_sum_capacity: negative gain");
  const double v = std::min({2.0 * nd, sum_bound_single(nd, nc), sum_bound_double(nd, nc)});
  return {v, BoundKind::Exact, "thm1"};
}

RateBound qs_worst_case_capacity(const ChannelConfig& cfg) {
  cfg.validate();
  if (cfg.p == 0.0) return {2.0 * cfg.nd, BoundKind::Exact, "thm2"};
  const double v = std::min({2.0 * cfg.nd, sum_bound_single(cfg.nd, cfg.nc),
                             sum_bound_double(cfg.nd, cfg.nc)});
  return {v, BoundKind::Exact, "thm2"};
}

OpportunisticRates qs_opportunistic(const ChannelConfig& cfg, const Setting& setting) {
  cfg.validate();
  const bool corr = cfg.correlation == Correlation::FullyCorrelated;
  if (setting.csi != Csi::GlobalCSIRT || !corr) {
    // Theorems 3 and 7 need a non-degenerate state distribution.
    if (!(cfg.p > 0.0 && cfg.p < 1.0))
      throw std::domain_error(setting.csi == Csi::GlobalCSIRT
                                  ? "qs_opportunistic: theorem 7 requires 0 < p < 1"
                                  : "qs_opportunistic: theorem 3 requires 0 < p < 1");
  } else if (cfg.p >= 1.0) {
    throw std::domain_error("qs_opportunistic: theorem 8 requires p < 1");
  }

  const double sp = sum_bound_single(cfg.nd, cfg.nc);
  const double R = std::min({2.0 * cfg.nd, sp, sum_bound_double(cfg.nd, cfg.nc)});
  const double d01 = sp - R;  // per-user increment when only the other link is hit

  OpportunisticRates out;
  out.R = R;
  out.deltas["11"] = 0.0;
  if (setting.csi == Csi::GlobalCSIRT) {
    out.deltas["00"] = 2.0 * cfg.nd - R;
    if (!corr) {
      out.deltas["01"] = d01;
      out.deltas["10"] = d01;
    }
  } else {
    out.deltas["00"] = 2.0 * d01;
    if (!corr) {
      out.deltas["01"] = d01;
      out.deltas["10"] = d01;
    }
  }
  return out;
}

bool qs_opportunistic_feasible(const ChannelConfig& cfg, const Setting& setting,
                               double R, const std::map<std::string, double>& deltas,
                               double tol) {
  cfg.validate();
  const double sp = sum_bound_single(cfg.nd, cfg.nc);
  const double base = cfg.p == 0.0
                          ? 2.0 * cfg.nd
                          : std::min({2.0 * cfg.nd, sp, sum_bound_double(cfg.nd, cfg.nc)});
  auto delta_of = [&](const char* key) {
    auto it = deltas.find(key);
    return it == deltas.end() ? 0.0 : it->second;
  };
  if (R < -tol || R > base + tol) return false;
  for (const auto& [k, v] : deltas)
    if (v < -tol) return false;
  if (delta_of("11") > tol) return false;
  if (R + delta_of("00") > 2.0 * cfg.nd + tol) return false;
  if (cfg.correlation == Correlation::Independent) {
    if (R + delta_of("01") > sp + tol) return false;
    if (R + delta_of("10") > sp + tol) return false;
    if (setting.csi != Csi::GlobalCSIRT) {
      // Local CSI: the joint increments are induced per-user.
      if (std::fabs(delta_of("00") - (delta_of("01") + delta_of("10"))) > tol) return false;
    }
  }
  return true;
}

RateBound ergodic_converse(const ChannelConfig& cfg, const Setting& setting) {
  cfg.validate();
  const Region region = classify_region(cfg);
  const bool tight = ergodic_is_tight(cfg, setting);
  const BoundKind kind = tight ? BoundKind::Exact : BoundKind::Converse;
  if (region == Region::VSI) return {2.0 * cfg.nd, BoundKind::Exact, "parallel"};
  if (cfg.p == 0.0) return {2.0 * cfg.nd, BoundKind::Exact, "parallel"};

  const bool corr = cfg.correlation == Correlation::FullyCorrelated;
  switch (setting.csi) {
    case Csi::LocalCSIR:
      return {std::min(eq23_ub_tk(cfg), eq24_ub_wang(cfg)), kind, "thm4"};
    case Csi::LocalCSIRT:
      if (corr)  // local CSIRT with B1 = B2 coincides with global CSIRT
        return {std::min(eq59_global(cfg), eq67_global_corr(cfg)), kind, "thm11"};
      // Eq. (24) is a CSIR-only bound; the global converses still apply.
      return {std::min({eq23_ub_tk(cfg), eq59_global(cfg), eq60_global(cfg)}), kind,
              "eq23+thm9"};
    case Csi::GlobalCSIRT:
      if (corr) return {std::min(eq59_global(cfg), eq67_global_corr(cfg)), kind, "thm11"};
      return {std::min(eq59_global(cfg), eq60_global(cfg)), kind, "thm9"};
  }
  throw std::logic_error("unreachable");
}

RateBound ergodic_achievable(const ChannelConfig& cfg, const Setting& setting,
                             long csirt_budget) {
  cfg.validate();
  const Region region = classify_region(cfg);
  const bool tight = ergodic_is_tight(cfg, setting);
  const BoundKind kind = tight ? BoundKind::Exact : BoundKind::Achievable;
  if (region == Region::VSI) return {2.0 * cfg.nd, BoundKind::Exact, "parallel"};
  if (cfg.p == 0.0) return {2.0 * cfg.nd, BoundKind::Exact, "parallel"};

  const bool corr = cfg.correlation == Correlation::FullyCorrelated;
  switch (setting.csi) {
    case Csi::LocalCSIR:
      return {eq25_local_achievable(cfg), kind, "thm5"};
    case Csi::LocalCSIRT: {
      if (corr) {
        if (region == Region::VWI || region == Region::WI)
          return {2.0 * ((1.0 - cfg.p) * cfg.nd +
                         cfg.p * 0.5 * sum_bound_double(cfg.nd, cfg.nc)),
                  kind, "thm12"};
        return {eq69_global_corr_ach_mi_si(cfg), kind, "thm12"};
      }
      if (region == Region::VWI)
        return {2.0 * (cfg.nd - cfg.p * cfg.nc), kind, "eq29"};
      const double csir = eq25_local_achievable(cfg);
      const auto opt = optimize_csirt(cfg, csirt_budget);
      return {std::max(csir, opt.sum), kind, "sec4"};
    }
    case Csi::GlobalCSIRT: {
      if (corr) {
        if (region == Region::VWI || region == Region::WI)
          return {2.0 * ((1.0 - cfg.p) * cfg.nd +
                         cfg.p * 0.5 * sum_bound_double(cfg.nd, cfg.nc)),
                  kind, "thm12"};
        return {eq69_global_corr_ach_mi_si(cfg), kind, "thm12"};
      }
      if (region == Region::VWI || region == Region::WI)
        return {eq61_global_ach_vwi_wi(cfg), kind, "thm10"};
      if (region == Region::MI) return {eq62_global_ach_mi(cfg), kind, "thm10"};
      return {eq63_global_ach_si(cfg), kind, "thm10"};
    }
  }
  throw std::logic_error("unreachable");
}

double named_corner(const ChannelConfig& cfg, NamedCorner which) {
  cfg.validate();
  const Region region = classify_region(cfg);
  const double p = cfg.p;
  const double nd = cfg.nd, nc = cfg.nc;
  switch (which) {
    case NamedCorner::C_LMI:
      if (region != Region::MI) throw std::domain_error("C_LMI requires MI");
      return std::min(2.0 * (2.0 * (nd - nc) + p * (3.0 * nc - 2.0 * nd)),
                      2.0 * ((1.0 - p) / (1.0 + p) * nd + p / (1.0 + p) * (2.0 * nd - nc)));
    case NamedCorner::C_LSI:
      if (region != Region::SI) throw std::domain_error("C_LSI requires SI");
      return std::min(2.0 * p * nc,
                      2.0 * ((1.0 - p) / (1.0 + p) * nd + p / (1.0 + p) * nc));
    case NamedCorner::C_GMI:
      if (region != Region::MI) throw std::domain_error("C_GMI requires MI");
      return std::min(2.0 * nd - p * nc,
                      2.0 * ((1.0 - p * p) * nd - (1.0 - 2.0 * p) * p * nc));
    case NamedCorner::C_GSI:
      if (region != Region::SI) throw std::domain_error("C_GSI requires SI");
      return std::min(nc * p + 2.0 * (1.0 - p) * nd,
                      2.0 * nd * (1.0 - p) * (1.0 - p) + 2.0 * nc * p);
  }
  throw std::logic_error("unreachable");
}

RateBound average_sum_capacity(const ChannelConfig& cfg, const Setting& setting) {
  cfg.validate();
  if (setting.timing != Timing::QuasiStatic)
    throw std::invalid_argument("average_sum_capacity applies to the quasi-static channel");
  const Region region = classify_region(cfg);
  const double p = cfg.p, nd = cfg.nd, nc = cfg.nc;
  if (region == Region::VSI) return {2.0 * nd, BoundKind::Exact, "parallel"};

  const bool corr = cfg.correlation == Correlation::FullyCorrelated;
  double v = 0.0;
  if (setting.csi != Csi::GlobalCSIRT) {
    switch (region) {
      case Region::VWI: v = 2.0 * (nd - p * nc); break;
      case Region::WI:
        v = p <= 0.5 ? 2.0 * (nd - p * nc)
                     : 4.0 * (nd - nc) + 2.0 * p * (3.0 * nc - 2.0 * nd);
        break;
      case Region::MI: v = p <= 0.5 ? 2.0 * (nd - p * nc) : 2.0 * nd - nc; break;
      case Region::SI: v = p <= 0.5 ? 2.0 * (1.0 - 2.0 * p) * nd + 2.0 * p * nc : nc; break;
      default: break;
    }
    return {v, BoundKind::Exact, "tab3"};
  }
  if (!corr) {
    switch (region) {
      case Region::VWI: v = 2.0 * (nd - p * nc); break;
      case Region::WI: v = 2.0 * ((1.0 - p * p) * nd + (2.0 * p - 1.0) * p * nc); break;
      case Region::MI: v = 2.0 * nd - p * nc * (2.0 - p); break;
      case Region::SI: v = 2.0 * nd * (1.0 - p) * (1.0 - p) + p * nc * (2.0 - p); break;
      default: break;
    }
    return {v, BoundKind::Exact, "tab8"};
  }
  switch (region) {
    case Region::VWI: v = 2.0 * (nd - p * nc); break;
    case Region::WI: v = 2.0 * ((1.0 - p) * nd + p * nc); break;
    case Region::MI: v = 2.0 * (1.0 - p) * nd + p * (2.0 * nd - nc); break;
    case Region::SI: v = 2.0 * (1.0 - p) * nd + p * nc; break;
    default: break;
  }
  return {v, BoundKind::Exact, "tab9"};
}

RateBound feedback_capacity(const ChannelConfig& cfg) {
  cfg.validate();
  if (cfg.correlation != Correlation::FullyCorrelated)
    throw std::invalid_argument("feedback_capacity: fully correlated states required");
  const double p = cfg.p, nd = cfg.nd, nc = cfg.nc;
  double v;
  if (nc <= nd)
    v = 2.0 * nd - 2.0 * p / (1.0 + p) * nc;
  else if (nc <= 2 * nd)
    v = 2.0 * (1.0 - p) / (1.0 + p) * nd + 2.0 * p / (1.0 + p) * nc;
  else
    v = 2.0 * (1.0 - p) * nd + p * nc;
  return {v, BoundKind::Exact, "thm13"};
}

RateBound generalized_global_converse(int nd, int nc, const StatePmf& pmf) {
  if (nd < 0 || nc < 0) throw std::invalid_argument("generalized_global_converse: negative gain");
  pmf.validate();
  const double sp = sum_bound_single(nd, nc);
  const double mx = 0.5 * sum_bound_double(nd, nc);
  const double b1 = 2.0 * (pmf.p00 + pmf.p01) * nd + (pmf.p10 + pmf.p11) * sp;
  const double b2 = 2.0 * (pmf.p00 + pmf.p10) * nd + (pmf.p01 + pmf.p11) * sp;
  const double b3 = (pmf.p01 + pmf.p10) * sp + 2.0 * (pmf.p00 * nd + pmf.p11 * mx);
  const double v = std::min({b1, b2, b3, 2.0 * static_cast<double>(nd)});
  return {v, BoundKind::Converse, "remark9"};
}

bool ergodic_is_tight(const ChannelConfig& cfg, const Setting& setting) {
  const Region region = classify_region(cfg);
  if (region == Region::VSI || cfg.p == 0.0 || cfg.p == 1.0) return true;
  const bool corr = cfg.correlation == Correlation::FullyCorrelated;
  switch (setting.csi) {
    case Csi::LocalCSIR:
      return cfg.p <= 0.5 || region == Region::VWI || region == Region::WI;
    case Csi::LocalCSIRT:
      if (corr) return true;  // coincides with global CSIRT
      return region == Region::VWI;
    case Csi::GlobalCSIRT:
      if (corr) return true;
      return region == Region::VWI || region == Region::WI;
  }
  return false;
}

}  // namespace burstyic

#include "burstyic/csirt.hpp"

#include <cmath>

namespace burstyic {

const char* subregion_name(Subregion s) {
  switch (s) {
    case Subregion::WI: return "WI";
    case Subregion::MI_a: return "MI_a";
    case Subregion::MI_b: return "MI_b";
    case Subregion::MI_c: return "MI_c";
    case Subregion::MI_d: return "MI_d";
    case Subregion::SI_a: return "SI_a";
    case Subregion::SI_b: return "SI_b";
    case Subregion::SI_c: return "SI_c";
    case Subregion::SI_d: return "SI_d";
  }
  return "?";
}

int subregion_low_count(Subregion s) {
  switch (s) {
    case Subregion::WI: return 4;
    case Subregion::MI_a:
    case Subregion::MI_b: return 10;
    case Subregion::MI_c:
    case Subregion::MI_d: return 6;
    case Subregion::SI_a:
    case Subregion::SI_b:
    case Subregion::SI_c: return 4;
    case Subregion::SI_d: return 0;
  }
  return 0;
}

int subregion_high_count(Subregion s) {
  switch (s) {
    case Subregion::WI: return 0;
    case Subregion::MI_a:
    case Subregion::MI_b: return 2;
    case Subregion::MI_c:
    case Subregion::MI_d: return 4;
    case Subregion::SI_a: return 4;
    case Subregion::SI_b:
    case Subregion::SI_c: return 2;
    case Subregion::SI_d: return 2;
  }
  return 0;
}

std::vector<Subregion> subregions_for(const ChannelConfig& cfg) {
  const long nd = cfg.nd, nc = cfg.nc;
  if (nd <= 0) throw std::domain_error("subregions_for: nd must be positive");
  std::vector<Subregion> out;
  auto in = [&](long lo_num, long lo_den, long hi_num, long hi_den) {
    // lo_num/lo_den <= alpha <= hi_num/hi_den, exact in integers
    return lo_den * nc * 1 >= lo_num * nd && hi_den * nc <= hi_num * nd;
  };
  if (2 * nc > nd && 3 * nc <= 2 * nd) out.push_back(Subregion::WI);
  if (3 * nc > 2 * nd && in(2, 3, 3, 4)) out.push_back(Subregion::MI_a);
  if (in(3, 4, 4, 5)) out.push_back(Subregion::MI_b);
  if (in(4, 5, 6, 7)) out.push_back(Subregion::MI_c);
  if (in(6, 7, 1, 1)) out.push_back(Subregion::MI_d);
  if (nc > nd && in(1, 1, 6, 5)) out.push_back(Subregion::SI_a);
  if (in(6, 5, 4, 3)) out.push_back(Subregion::SI_b);
  if (in(4, 3, 3, 2)) out.push_back(Subregion::SI_c);
  if (in(3, 2, 2, 1)) out.push_back(Subregion::SI_d);
  return out;
}

void CsirtParams::validate() const {
  if (static_cast<int>(low.size()) != subregion_low_count(subregion) ||
      static_cast<int>(high.size()) != subregion_high_count(subregion))
    throw std::invalid_argument("CsirtParams: wrong parameter vector length");
  for (double v : low)
    if (v < 0.0 || v > 0.5) throw std::domain_error("CsirtParams: low parameter outside [0,1/2]");
  for (double v : high)
    if (v < 0.5 || v > 1.0) throw std::domain_error("CsirtParams: high parameter outside [1/2,1]");
}

CsirtParams CsirtParams::swapped() const {
  CsirtParams s = *this;
  const std::size_t nl = low.size() / 2, nh = high.size() / 2;
  for (std::size_t i = 0; i < nl; ++i) std::swap(s.low[i], s.low[nl + i]);
  for (std::size_t i = 0; i < nh; ++i) std::swap(s.high[i], s.high[nh + i]);
  return s;
}

CsirtParams CsirtParams::symmetric_point(Subregion s) {
  CsirtParams p;
  p.subregion = s;
  p.low.assign(subregion_low_count(s), 0.5);
  p.high.assign(subregion_high_count(s), 0.5);
  return p;
}

namespace {

struct Derived {
  double p;
  // own-user block
  double p1, p2, p3, pt1, pt2, pt3, ph1, ph3, eta1, etap, etat;
  // other-user block
  double q1, q2, q3, qt1, qt2, qt3, qh1, qh3, gamma1, gammap, gammat;
};

// Unpack the parameter vectors for the rate of the user whose own block is
// listed first; feed params.swapped() to obtain the other user's rate.
Derived derive(const ChannelConfig& cfg, const CsirtParams& prm) {
  Derived d{};
  d.p = cfg.p;
  const auto& lo = prm.low;
  const auto& hi = prm.high;
  auto mix3 = [&](double a, double b) { return (1.0 - d.p) * a + d.p * b; };
  switch (prm.subregion) {
    case Subregion::WI:
    case Subregion::SI_a:
    case Subregion::SI_b:
    case Subregion::SI_c:
      d.p1 = lo[0]; d.p2 = lo[1]; d.q1 = lo[2]; d.q2 = lo[3];
      break;
    case Subregion::MI_a:
    case Subregion::MI_b:
      d.p1 = lo[0]; d.p2 = lo[1]; d.pt1 = lo[2]; d.pt2 = lo[3]; d.ph1 = lo[4];
      d.q1 = lo[5]; d.q2 = lo[6]; d.qt1 = lo[7]; d.qt2 = lo[8]; d.qh1 = lo[9];
      break;
    case Subregion::MI_c:
    case Subregion::MI_d:
      d.p1 = lo[0]; d.p2 = lo[1]; d.ph1 = lo[2];
      d.q1 = lo[3]; d.q2 = lo[4]; d.qh1 = lo[5];
      break;
    case Subregion::SI_d:
      break;
  }
  switch (prm.subregion) {
    case Subregion::MI_a:
    case Subregion::MI_b:
    case Subregion::SI_b:
    case Subregion::SI_c:
    case Subregion::SI_d:
      d.eta1 = hi[0]; d.gamma1 = hi[1];
      break;
    case Subregion::MI_c:
    case Subregion::MI_d:
    case Subregion::SI_a:
      d.eta1 = hi[0]; d.etap = hi[1]; d.gamma1 = hi[2]; d.gammap = hi[3];
      break;
    case Subregion::WI:
      break;
  }
  d.p3 = mix3(d.p1, d.p2);
  d.q3 = mix3(d.q1, d.q2);
  d.pt3 = mix3(d.pt1, d.pt2);
  d.qt3 = mix3(d.qt1, d.qt2);
  d.ph3 = (1.0 - d.p) * d.ph1;
  d.qh3 = (1.0 - d.p) * d.qh1;
  d.etat = d.p + d.eta1 * (1.0 - d.p);
  d.gammat = d.p + d.gamma1 * (1.0 - d.p);
  return d;
}

// Per-state receive rates; R = (1-p) b0 + p b1.
double rate_one_user(const ChannelConfig& cfg, const CsirtParams& prm) {
  const Derived d = derive(cfg, prm);
  const double nd = cfg.nd, nc = cfg.nc, p = cfg.p;
  double b0 = 0.0, b1 = 0.0;
  switch (prm.subregion) {
    case Subregion::WI: {
      const double dl = nd - nc, w = 2.0 * nc - nd;
      b0 = 2.0 * dl + w * h_b(d.p1);
      b1 = dl + w * (1.0 - h_b(d.q3));
      break;
    }
    case Subregion::MI_a: {
      const double dl = nd - nc;
      const double w = (3.0 * nc - 2.0 * nd) / 2.0, v = (4.0 * nd - 5.0 * nc) / 2.0;
      b0 = 2.0 * dl + w * (h_b(d.eta1) + h_b(d.ph1) + h_b(d.p1)) + v * h_b(d.pt1);
      b1 = dl + w * (1.0 + h_sum(d.p2, d.gammat) - h_b(d.gammat) + h_sum(d.pt2, d.q3) -
                     h_b(d.q3) - h_b(d.qh3)) +
           v * (1.0 - h_b(d.qt3));
      break;
    }
    case Subregion::MI_b: {
      const double dl = nd - nc;
      const double w = (3.0 * nc - 2.0 * nd) / 2.0, v = (4.0 * nd - 5.0 * nc) / 2.0;
      b0 = 2.0 * dl + w * (h_b(d.p1) + h_b(d.eta1) + h_b(d.ph1)) + v * h_b(d.pt1);
      b1 = dl + w * (h_sum(d.p2, d.gammat) - h_b(d.gammat) + 1.0 - h_b(d.qh3)) +
           v * (h_sum(d.pt2, d.q3) - h_b(d.q3) + 1.0 - h_b(d.qt3));
      break;
    }
    case Subregion::MI_c: {
      const double dl = nd - nc;
      const double s = (5.0 * nc - 4.0 * nd) / 2.0, t = (6.0 * nd - 7.0 * nc) / 2.0;
      const double mix = d.etap * (1.0 - d.gammat) + (1.0 - d.etap) * d.gammat;
      b0 = dl + s * (1.0 + h_b(d.etap)) + dl * (1.0 + h_b(d.p1) + h_b(d.eta1) + h_b(d.ph1));
      b1 = dl + s * (1.0 - h_b(d.gammat) + h_sum(d.p2, d.gammap) - h_b(d.gammap) +
                     h_sum(mix, d.q3) - h_b(d.q3)) +
           t * (h_sum(d.p2, d.gammat) - h_b(d.gammat)) + dl * (1.0 - h_b(d.qh3));
      break;
    }
    case Subregion::MI_d: {
      const double dl = nd - nc;
      const double c2 = 7.0 * nc - 6.0 * nd;
      const double mix = d.etap * (1.0 - d.gammat) + (1.0 - d.etap) * d.gammat;
      b0 = dl + (6.0 * nc - 5.0 * nd) * h_b(d.p1) +
           dl * (2.0 + h_b(d.eta1) + h_b(d.etap) + h_b(d.ph1));
      b1 = dl + dl * (2.0 - h_b(d.gammat) - h_b(d.qh3) + h_sum(mix, d.q3) - h_b(d.q3)) +
           dl * (h_sum(d.p2, d.gammap) - h_b(d.gammap)) +
           c2 * (h_sum(d.p2, d.q3) - h_b(d.q3));
      break;
    }
    case Subregion::SI_a: {
      const double dl = nc - nd;
      const double c = 5.0 * nd - 4.0 * nc, c2 = 6.0 * nd - 5.0 * nc;
      const double mix = d.etap * (1.0 - d.gammat) + (1.0 - d.etap) * d.gammat;
      b0 = dl + c * h_b(d.p1) + dl * (1.0 + h_b(d.eta1) + h_b(d.etap));
      b1 = dl + dl * (1.0 - h_b(d.gammat) + h_sum(mix, d.q3) - h_b(d.q3)) +
           dl * (h_sum(d.p2, d.gammap) - h_b(d.gammap)) +
           c2 * (h_sum(d.p2, d.q3) - h_b(d.q3));
      break;
    }
    case Subregion::SI_b: {
      const double dl = nc - nd;
      const double a = (4.0 * nd - 3.0 * nc) / 2.0;
      b0 = a * (1.0 + h_b(d.eta1)) + 2.0 * dl + dl * h_b(d.p1);
      b1 = a * (1.0 - h_b(d.gammat)) + dl * (1.0 - h_b(d.q3)) + dl;
      break;
    }
    case Subregion::SI_c: {
      const double m = (2.0 * nd - nc) / 2.0;
      const double g = 3.0 * nd - 2.0 * nc, h = (3.0 * nc - 4.0 * nd) / 2.0;
      b0 = m + g * (1.0 + h_b(d.p1)) + h * (1.0 + h_b(d.eta1));
      b1 = m + g * (1.0 - h_b(d.q3)) + h * (1.0 - h_b(d.gammat));
      break;
    }
    case Subregion::SI_d: {
      const double dl = nc - nd, m = (2.0 * nd - nc) / 2.0;
      b0 = dl + m * (1.0 + h_b(d.eta1));
      b1 = dl + m * (1.0 - h_b(d.gammat));
      break;
    }
  }
  return (1.0 - p) * b0 + p * b1;
}

// The cited SI (1,6/5] user-2 rate carries a mismatched mixed term,
// H_sum(gamma'(1-etat)+(1-gamma')etat, q3) - H_b(p3). Evaluated here in the
// already-swapped frame, where that reads h_sum(mix, d.p3) - h_b(d.q3).
double rate_one_user_si_a_printed_swapped(const ChannelConfig& cfg, const CsirtParams& prm) {
  const Derived d = derive(cfg, prm);
  const double nd = cfg.nd, nc = cfg.nc, p = cfg.p;
  const double dl = nc - nd;
  const double c = 5.0 * nd - 4.0 * nc, c2 = 6.0 * nd - 5.0 * nc;
  const double mix = d.etap * (1.0 - d.gammat) + (1.0 - d.etap) * d.gammat;
  const double b0 = dl + c * h_b(d.p1) + dl * (1.0 + h_b(d.eta1) + h_b(d.etap));
  const double b1 = dl + dl * (1.0 - h_b(d.gammat) + h_sum(mix, d.p3) - h_b(d.q3)) +
                    dl * (h_sum(d.p2, d.gammap) - h_b(d.gammap)) +
                    c2 * (h_sum(d.p2, d.q3) - h_b(d.q3));
  return (1.0 - p) * b0 + p * b1;
}

}  // namespace

RatePair csirt_rate_pair(const ChannelConfig& cfg, const CsirtParams& params,
                         Eq45Variant variant) {
  cfg.validate();
  params.validate();
  const auto valid = subregions_for(cfg);
  bool ok = false;
  for (auto s : valid) ok = ok || s == params.subregion;
  if (!ok) throw std::domain_error("csirt_rate_pair: alpha outside the subregion interval");

  RatePair rp;
  rp.r1 = rate_one_user(cfg, params);
  if (variant == Eq45Variant::AsPrinted && params.subregion == Subregion::SI_a) {
    rp.r2 = rate_one_user_si_a_printed_swapped(cfg, params.swapped());
  } else {
    rp.r2 = rate_one_user(cfg, params.swapped());
  }
  return rp;
}

}  // namespace burstyic

#include "burstyic/csirt_oracle.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace burstyic {

namespace {

// A variable group of one user's signal: one packed level (or a paired pair
// of levels) with a common conditional pmf given that user's state bit.
struct VarSpec {
  enum Kind { U, C, PairCopy, PairFlip } kind = U;
  double a0 = 0.5;  // C: P(1|b=0); pairs: P(equal)
  double a1 = 0.5;  // C: P(1|b=1)

  int bits() const { return kind == PairCopy || kind == PairFlip ? 2 : 1; }

  // Probability of the assignment (bit0 [, bit1]) given the owner's state b.
  double prob(int bit0, int bit1, int b) const {
    switch (kind) {
      case U: return 0.5;
      case C: {
        const double a = b ? a1 : a0;
        return bit0 ? a : 1.0 - a;
      }
      case PairCopy: {
        const double eq = b ? 1.0 : a0;
        return 0.5 * (bit0 == bit1 ? eq : 1.0 - eq);
      }
      case PairFlip:
        return 0.5 * (bit0 == bit1 ? a0 : 1.0 - a0);
    }
    return 0.0;
  }
};

struct Row {
  int x1_bit = -1;  // index into the flattened x1 bit vector, -1 if absent
  int x2_bit = -1;  // interferer bit under this level, gated by own state
};

struct Component {
  double width = 0.0;
  std::vector<VarSpec> x1;
  std::vector<VarSpec> x2;
  std::vector<Row> rows;
};

int total_bits(const std::vector<VarSpec>& vars) {
  int n = 0;
  for (const auto& v : vars) n += v.bits();
  return n;
}

// P(assignment | state) for a whole variable list; assignment packed LSB-first.
double list_prob(const std::vector<VarSpec>& vars, std::uint32_t bits, int b) {
  double pr = 1.0;
  int pos = 0;
  for (const auto& v : vars) {
    const int b0 = (bits >> pos) & 1;
    const int b1 = v.bits() == 2 ? (bits >> (pos + 1)) & 1 : 0;
    pr *= v.prob(b0, b1, b);
    pos += v.bits();
  }
  return pr;
}

// I(X1; Y | B1 = b1) with the interferer's state marginalized Bernoulli(p).
double component_mi(const Component& c, int b1, double p) {
  const int n1 = total_bits(c.x1);
  const int n2 = total_bits(c.x2);
  const int ny = static_cast<int>(c.rows.size());
  const std::uint32_t N1 = 1u << n1, N2 = 1u << n2, NY = 1u << ny;

  // Marginal pmf of the interferer bits over its own state.
  std::vector<double> p2(N2, 0.0);
  for (std::uint32_t a = 0; a < N2; ++a)
    p2[a] = (1.0 - p) * list_prob(c.x2, a, 0) + p * list_prob(c.x2, a, 1);

  std::vector<double> joint(static_cast<std::size_t>(N1) * NY, 0.0);
  for (std::uint32_t a1 = 0; a1 < N1; ++a1) {
    const double pr1 = list_prob(c.x1, a1, b1);
    if (pr1 == 0.0) continue;
    for (std::uint32_t a2 = 0; a2 < N2; ++a2) {
      const double pr = pr1 * p2[a2];
      if (pr == 0.0) continue;
      std::uint32_t y = 0;
      for (int r = 0; r < ny; ++r) {
        int bit = 0;
        if (c.rows[r].x1_bit >= 0) bit ^= (a1 >> c.rows[r].x1_bit) & 1;
        if (b1 && c.rows[r].x2_bit >= 0) bit ^= (a2 >> c.rows[r].x2_bit) & 1;
        y |= static_cast<std::uint32_t>(bit) << r;
      }
      joint[static_cast<std::size_t>(a1) * NY + y] += pr;
    }
  }

  std::vector<double> py(NY, 0.0), px(N1, 0.0);
  for (std::uint32_t a1 = 0; a1 < N1; ++a1)
    for (std::uint32_t y = 0; y < NY; ++y) {
      const double v = joint[static_cast<std::size_t>(a1) * NY + y];
      py[y] += v;
      px[a1] += v;
    }
  double mi = 0.0;
  for (std::uint32_t a1 = 0; a1 < N1; ++a1)
    for (std::uint32_t y = 0; y < NY; ++y) {
      const double v = joint[static_cast<std::size_t>(a1) * NY + y];
      if (v > 0.0) mi += v * std::log2(v / (px[a1] * py[y]));
    }
  return mi;
}

struct Block {
  // Own-user parameters first, interferer second (swap for the other user).
  double p1 = 0.5, p2 = 0.5, pt1 = 0.5, pt2 = 0.5, ph1 = 0.5;
  double eta1 = 0.5, etap = 0.5;
  double q1 = 0.5, q2 = 0.5, qt1 = 0.5, qt2 = 0.5, qh1 = 0.5;
  double gamma1 = 0.5, gammap = 0.5;
};

Block unpack(const CsirtParams& prm) {
  Block b;
  const auto& lo = prm.low;
  const auto& hi = prm.high;
  switch (prm.subregion) {
    case Subregion::WI:
    case Subregion::SI_a:
    case Subregion::SI_b:
    case Subregion::SI_c:
      b.p1 = lo[0]; b.p2 = lo[1]; b.q1 = lo[2]; b.q2 = lo[3];
      break;
    case Subregion::MI_a:
    case Subregion::MI_b:
      b.p1 = lo[0]; b.p2 = lo[1]; b.pt1 = lo[2]; b.pt2 = lo[3]; b.ph1 = lo[4];
      b.q1 = lo[5]; b.q2 = lo[6]; b.qt1 = lo[7]; b.qt2 = lo[8]; b.qh1 = lo[9];
      break;
    case Subregion::MI_c:
    case Subregion::MI_d:
      b.p1 = lo[0]; b.p2 = lo[1]; b.ph1 = lo[2];
      b.q1 = lo[3]; b.q2 = lo[4]; b.qh1 = lo[5];
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
      b.eta1 = hi[0]; b.gamma1 = hi[1];
      break;
    case Subregion::MI_c:
    case Subregion::MI_d:
    case Subregion::SI_a:
      b.eta1 = hi[0]; b.etap = hi[1]; b.gamma1 = hi[2]; b.gammap = hi[3];
      break;
    case Subregion::WI:
      break;
  }
  return b;
}

const VarSpec U{VarSpec::U, 0.5, 0.5};
VarSpec Cv(double a0, double a1) { return {VarSpec::C, a0, a1}; }
VarSpec PairC(double eta) { return {VarSpec::PairCopy, eta, 0.0}; }
VarSpec PairF(double etap) { return {VarSpec::PairFlip, etap, 0.0}; }

std::vector<Component> layout(const ChannelConfig& cfg, Subregion s, const Block& b) {
  const double nd = cfg.nd, nc = cfg.nc;
  std::vector<Component> out;
  auto add = [&](double width, std::vector<VarSpec> x1, std::vector<VarSpec> x2,
                 std::vector<Row> rows) {
    if (width <= 0.0) return;
    out.push_back({width, std::move(x1), std::move(x2), std::move(rows)});
  };
  auto clean_u = [&](double w) { add(w, {U}, {}, {{0, -1}}); };
  auto uu = [&](double w) { add(w, {U}, {U}, {{0, 0}}); };
  auto uC = [&](double w, double a0, double a1) { add(w, {U}, {Cv(a0, a1)}, {{0, 0}}); };
  auto Cu = [&](double w, double a0, double a1) { add(w, {Cv(a0, a1)}, {U}, {{0, 0}}); };
  auto CC = [&](double w, double o0, double o1, double i0, double i1) {
    add(w, {Cv(o0, o1)}, {Cv(i0, i1)}, {{0, 0}});
  };

  switch (s) {
    case Subregion::WI: {
      const double dl = nd - nc, w = 2.0 * nc - nd;
      clean_u(dl);
      Cu(w, b.p1, b.p2);
      uu(2.0 * nd - 3.0 * nc);
      uC(w, b.q1, b.q2);
      break;
    }
    case Subregion::MI_a:
    case Subregion::MI_b: {
      const double w = (3.0 * nc - 2.0 * nd) / 2.0, v = (4.0 * nd - 5.0 * nc) / 2.0;
      // A clean; At over A2; C over At2.
      add(w, {PairC(b.eta1), Cv(b.p1, b.p2)}, {PairC(b.gamma1)},
          {{0, -1}, {1, 0}, {2, 1}});
      if (s == Subregion::MI_a) {
        CC(w, b.pt1, b.pt2, b.q1, b.q2);   // D over C2
        Cu(v - w, b.pt1, b.pt2);           // rest of D over uniform
        Cu(w, b.ph1, 0.0);                 // E over uniform
      } else {
        CC(v, b.pt1, b.pt2, b.q1, b.q2);   // D over part of C2
        CC(w - v, b.ph1, 0.0, b.q1, b.q2); // E over the rest of C2
        Cu(v, b.ph1, 0.0);
      }
      uC(w, b.qh1, 0.0);                   // uniform over E2
      uC(v, b.qt1, b.qt2);                 // uniform over D2
      clean_u(v);
      break;
    }
    case Subregion::MI_c:
    case Subregion::MI_d: {
      const double dl = nd - nc;
      const double s1 = s == Subregion::MI_c ? (5.0 * nc - 4.0 * nd) / 2.0 : dl;
      // A clean; At over A2; B over At2; Bt over C2; C over Bt2; D over B2.
      add(s1,
          {PairC(b.eta1), PairF(b.etap), Cv(b.p1, b.p2), Cv(b.ph1, 0.0)},
          {PairC(b.gamma1), PairF(b.gammap), Cv(b.q1, b.q2)},
          {{0, -1}, {1, 0}, {2, 1}, {3, 4}, {4, 3}, {5, 2}});
      if (s == Subregion::MI_c) {
        const double t = (6.0 * nd - 7.0 * nc) / 2.0;
        add(t, {PairC(b.eta1), Cv(b.p1, b.p2)}, {PairC(b.gamma1)},
            {{0, -1}, {1, 0}, {2, 1}});
        Cu(t, b.ph1, 0.0);
      } else {
        CC(7.0 * nc - 6.0 * nd, b.p1, b.p2, b.q1, b.q2);
      }
      uC(dl, b.qh1, 0.0);
      break;
    }
    case Subregion::SI_a: {
      const double dl = nc - nd;
      // Own eta-pair rides clean; the interferer's copy-pair and C feed the
      // etap-pair rows; C over the flip-pair with its base revealed.
      add(dl, {PairC(b.eta1)}, {}, {{0, -1}, {1, -1}});
      add(dl, {PairF(b.etap)}, {PairC(b.gamma1), Cv(b.q1, b.q2)},
          {{-1, 0}, {0, 1}, {1, 2}});
      add(dl, {Cv(b.p1, b.p2)}, {PairF(b.gammap)}, {{-1, 0}, {0, 1}});
      CC(6.0 * nd - 5.0 * nc, b.p1, b.p2, b.q1, b.q2);
      break;
    }
    case Subregion::SI_b: {
      const double dl = nc - nd, a = (4.0 * nd - 3.0 * nc) / 2.0;
      add(a, {PairC(b.eta1)}, {PairC(b.gamma1), U}, {{-1, 0}, {0, 1}, {1, 2}});
      uC(dl, b.q1, b.q2);
      Cu(dl, b.p1, b.p2);
      clean_u(dl);
      break;
    }
    case Subregion::SI_c: {
      const double m = (2.0 * nd - nc) / 2.0;
      const double g = 3.0 * nd - 2.0 * nc, h = (3.0 * nc - 4.0 * nd) / 2.0;
      clean_u(m);
      uC(g, b.q1, b.q2);
      Cu(g, b.p1, b.p2);
      add(h, {PairC(b.eta1)}, {PairC(b.gamma1), U}, {{-1, 0}, {0, 1}, {1, 2}});
      break;
    }
    case Subregion::SI_d: {
      const double dl = nc - nd, m = (2.0 * nd - nc) / 2.0;
      add(m, {PairC(b.eta1)}, {}, {{0, -1}, {1, -1}});
      add(m, {U}, {PairC(b.gamma1)}, {{-1, 0}, {0, 1}});
      clean_u(dl - m);
      break;
    }
  }
  return out;
}

double rate_from_layout(const ChannelConfig& cfg, Subregion s, const Block& blk) {
  double r0 = 0.0, r1 = 0.0;
  for (const auto& comp : layout(cfg, s, blk)) {
    r0 += comp.width * component_mi(comp, 0, cfg.p);
    r1 += comp.width * component_mi(comp, 1, cfg.p);
  }
  return (1.0 - cfg.p) * r0 + cfg.p * r1;
}

Block swapped(const Block& b) {
  Block s = b;
  std::swap(s.p1, s.q1);
  std::swap(s.p2, s.q2);
  std::swap(s.pt1, s.qt1);
  std::swap(s.pt2, s.qt2);
  std::swap(s.ph1, s.qh1);
  std::swap(s.eta1, s.gamma1);
  std::swap(s.etap, s.gammap);
  return s;
}

}  // namespace

RatePair mi_oracle(const ChannelConfig& cfg, const CsirtParams& params) {
  cfg.validate();
  params.validate();
  const auto valid = subregions_for(cfg);
  bool ok = false;
  for (auto s : valid) ok = ok || s == params.subregion;
  if (!ok) throw std::domain_error("mi_oracle: alpha outside the subregion interval");

  const Block b = unpack(params);
  RatePair rp;
  rp.r1 = rate_from_layout(cfg, params.subregion, b);
  rp.r2 = rate_from_layout(cfg, params.subregion, swapped(b));
  return rp;
}

double pair_conditional_entropy(double eta) {
  // pmf of (X, Xt): P(0,0)=P(1,1)=eta/2, P(0,1)=P(1,0)=(1-eta)/2.
  const double pmf[2][2] = {{eta / 2, (1 - eta) / 2}, {(1 - eta) / 2, eta / 2}};
  double h = 0.0;
  for (int x = 0; x < 2; ++x) {
    const double px = pmf[x][0] + pmf[x][1];
    for (int xt = 0; xt < 2; ++xt)
      if (pmf[x][xt] > 0.0) h -= pmf[x][xt] * std::log2(pmf[x][xt] / px);
  }
  return h;
}

}  // namespace burstyic

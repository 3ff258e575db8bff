#include "burstyic/csirt_optimize.hpp"

#include <cmath>

namespace burstyic {

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr double kTieTol = 1e-12;

// Free coordinates: either the symmetry-tied half space (q := p, gamma := eta)
// or the full parameter vector. Low coordinates live in [0,1/2], high in [1/2,1].
struct Space {
  Subregion sub;
  bool symmetric;
  int nlow_half, nhigh_half;

  int dims() const { return (symmetric ? 1 : 2) * (nlow_half + nhigh_half); }
  bool coord_is_low(int i) const { return i < (symmetric ? nlow_half : 2 * nlow_half); }
  double lo(int i) const { return coord_is_low(i) ? 0.0 : 0.5; }
  double hi(int i) const { return coord_is_low(i) ? 0.5 : 1.0; }

  CsirtParams to_params(const std::vector<double>& x) const {
    CsirtParams p;
    p.subregion = sub;
    if (symmetric) {
      for (int r = 0; r < 2; ++r)
        for (int i = 0; i < nlow_half; ++i) p.low.push_back(x[i]);
      for (int r = 0; r < 2; ++r)
        for (int i = 0; i < nhigh_half; ++i) p.high.push_back(x[nlow_half + i]);
    } else {
      p.low.assign(x.begin(), x.begin() + 2 * nlow_half);
      p.high.assign(x.begin() + 2 * nlow_half, x.end());
    }
    return p;
  }

  std::vector<double> from_params(const CsirtParams& p) const {
    std::vector<double> x;
    if (symmetric) {
      x.insert(x.end(), p.low.begin(), p.low.begin() + nlow_half);
      x.insert(x.end(), p.high.begin(), p.high.begin() + nhigh_half);
    } else {
      x.insert(x.end(), p.low.begin(), p.low.end());
      x.insert(x.end(), p.high.begin(), p.high.end());
    }
    return x;
  }
};

bool lex_less(const CsirtParams& a, const CsirtParams& b) {
  if (a.low != b.low) return a.low < b.low;
  return a.high < b.high;
}

struct Search {
  const ChannelConfig& cfg;
  long budget;
  long used = 0;
  double best_sum = -1.0;
  bool have_best = false;
  CsirtParams best_params;

  double eval(const Space& sp, const std::vector<double>& x) {
    ++used;
    const CsirtParams prm = sp.to_params(x);
    const double s = csirt_rate_pair(cfg, prm).sum();
    if (!have_best || s > best_sum + kTieTol ||
        (std::fabs(s - best_sum) <= kTieTol && lex_less(prm, best_params))) {
      have_best = true;
      best_sum = s;
      best_params = prm;
    }
    return s;
  }

  bool exhausted(long cap) const { return used >= cap; }
};

void tensor_grid(Search& se, const Space& sp, int pts, long cap) {
  const int d = sp.dims();
  std::vector<int> idx(d, 0);
  std::vector<double> x(d);
  while (!se.exhausted(cap)) {
    for (int i = 0; i < d; ++i)
      x[i] = sp.lo(i) + (sp.hi(i) - sp.lo(i)) * idx[i] / (pts - 1);
    se.eval(sp, x);
    int i = 0;
    while (i < d && ++idx[i] == pts) idx[i++] = 0;
    if (i == d) return;
  }
}

// Cyclic 9-point per-coordinate scans starting from x; used when the tensor
// grid would not fit the budget, and as the asymmetric fallback pass.
std::vector<double> coordinate_grid(Search& se, const Space& sp, std::vector<double> x,
                                    int pts, int rounds, long cap) {
  const int d = sp.dims();
  double fx = se.eval(sp, x);
  for (int r = 0; r < rounds && !se.exhausted(cap); ++r) {
    for (int i = 0; i < d && !se.exhausted(cap); ++i) {
      double arg = x[i];
      for (int j = 0; j < pts && !se.exhausted(cap); ++j) {
        x[i] = sp.lo(i) + (sp.hi(i) - sp.lo(i)) * j / (pts - 1);
        const double f = se.eval(sp, x);
        if (f > fx + kTieTol) {
          fx = f;
          arg = x[i];
        }
      }
      x[i] = arg;
    }
  }
  return x;
}

// Coordinate-wise golden-section ascent until the sweep gain drops below 1e-7.
void golden_refine(Search& se, const Space& sp, std::vector<double> x, long cap) {
  const int d = sp.dims();
  if (d == 0) {
    se.eval(sp, x);
    return;
  }
  double fx = se.eval(sp, x);
  for (int sweep = 0; sweep < 100 && !se.exhausted(cap); ++sweep) {
    const double sweep_start = fx;
    for (int i = 0; i < d && !se.exhausted(cap); ++i) {
      const double keep = x[i];
      double a = sp.lo(i), b = sp.hi(i);
      auto f_at = [&](double v) {
        x[i] = v;
        return se.eval(sp, x);
      };
      double c = b - kGolden * (b - a), dd = a + kGolden * (b - a);
      double fc = f_at(c), fd = f_at(dd);
      while (b - a > 1e-10 && !se.exhausted(cap)) {
        if (fc >= fd) {
          b = dd;
          dd = c;
          fd = fc;
          c = b - kGolden * (b - a);
          fc = f_at(c);
        } else {
          a = c;
          c = dd;
          fc = fd;
          dd = a + kGolden * (b - a);
          fd = f_at(dd);
        }
      }
      const double mid = 0.5 * (a + b);
      const double fm = f_at(mid);
      if (fm >= fx) {
        fx = fm;
        x[i] = mid;
      } else {
        x[i] = keep;
      }
    }
    if (fx - sweep_start < 1e-7) break;
  }
}

bool on_box_edge(const CsirtParams& p) {
  const auto near = [](double v, double e) { return std::fabs(v - e) <= 1e-9; };
  for (double v : p.low)
    if (near(v, 0.0) || near(v, 0.5)) return true;
  for (double v : p.high)
    if (near(v, 0.5) || near(v, 1.0)) return true;
  return false;
}

void optimize_subregion(Search& se, Subregion sub, bool alpha_one, long cap) {
  const int nl = subregion_low_count(sub) / 2;
  const int nh = subregion_high_count(sub) / 2;

  const Space sym{sub, true, nl, nh};
  double tensor_cost = 1;
  for (int i = 0; i < sym.dims(); ++i) tensor_cost *= 9;

  std::vector<double> seed(sym.dims(), 0.5);
  if (sym.dims() == 0) {
    se.eval(sym, seed);
    return;
  }
  if (tensor_cost <= 0.5 * static_cast<double>(cap - se.used)) {
    tensor_grid(se, sym, 9, cap);
    if (se.best_params.subregion == sub) seed = sym.from_params(se.best_params);
  } else {
    seed = coordinate_grid(se, sym, seed, 9, 3, cap);
  }
  golden_refine(se, sym, seed, cap);

  const bool fall_back =
      alpha_one || (se.best_params.subregion == sub && on_box_edge(se.best_params));
  if (fall_back && !se.exhausted(cap)) {
    const Space full{sub, false, nl, nh};
    std::vector<double> x0(full.dims(), 0.5);
    if (se.best_params.subregion == sub) x0 = full.from_params(se.best_params);
    x0 = coordinate_grid(se, full, x0, 9, 2, cap);
    golden_refine(se, full, x0, cap);
  }
}

}  // namespace

CsirtOptimum optimize_csirt(const ChannelConfig& cfg, long budget) {
  cfg.validate();
  const Region region = classify_region(cfg);
  if (region == Region::VWI || region == Region::VSI)
    throw std::domain_error("optimize_csirt: no free parameters in this region");
  if (budget < 100) budget = 100;

  const auto subs = subregions_for(cfg);
  if (subs.empty()) throw std::domain_error("optimize_csirt: no parametrized subregion");

  Search se{cfg, budget};
  const bool alpha_one = cfg.nc == cfg.nd;
  long spent = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const long cap = spent + (budget - spent) / static_cast<long>(subs.size() - i);
    optimize_subregion(se, subs[i], alpha_one, cap);
    spent = se.used;
  }
  return {se.best_params, se.best_sum, se.used};
}

}  // namespace burstyic

#include "ctr/block_power.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>

namespace ctr {

namespace {

struct Search1D {
  double x;
  double value;
  bool fell_back;
};

// Maximizes f over [lo, hi]: a 64-point pre-scan checks that the profile
// rises then falls at most once; if so, golden-section refines around
// the best bracket, otherwise a 1024-point scan with local refinement
// covers the gap (and notes the fallback on stderr).
Search1D maximize_1d(const std::function<double(double)>& f, double lo, double hi) {
  if (!(hi > lo)) return {lo, f(lo), false};
  const auto golden = [&](double a, double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-12 * std::max(1.0, hi - lo)) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = f(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = f(x1);
      }
    }
    const double x = 0.5 * (a + b);
    return std::pair<double, double>{x, f(x)};
  };

  const auto scan = [&](int n, double a, double b) {
    int best_i = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    std::vector<double> vals(n + 1);
    for (int i = 0; i <= n; ++i) {
      vals[i] = f(a + (b - a) * i / n);
      if (vals[i] > best_v) {
        best_v = vals[i];
        best_i = i;
      }
    }
    return std::tuple<int, std::vector<double>>{best_i, std::move(vals)};
  };

  const auto [best64, vals64] = scan(64, lo, hi);
  bool unimodal = true;
  int direction = 1;  // expect a rise, then a single turn to falling
  const double tol = 1e-12 * std::max(1.0, std::abs(vals64[best64]));
  for (std::size_t i = 1; i < vals64.size(); ++i) {
    const double step = vals64[i] - vals64[i - 1];
    if (std::abs(step) <= tol) continue;
    if (step > 0.0 && direction < 0) {
      unimodal = false;
      break;
    }
    if (step < 0.0) direction = -1;
  }

  if (unimodal) {
    const double a = lo + (hi - lo) * std::max(0, best64 - 1) / 64.0;
    const double b = lo + (hi - lo) * std::min(64, best64 + 1) / 64.0;
    const auto [x, v] = golden(a, b);
    return {x, v, false};
  }
  std::cerr << "block-power: non-unimodal split profile, dense-scan fallback\n";
  const auto [best, vals] = scan(1024, lo, hi);
  (void)vals;
  const double a = lo + (hi - lo) * std::max(0, best - 1) / 1024.0;
  const double b = lo + (hi - lo) * std::min(1024, best + 1) / 1024.0;
  const auto [x, v] = golden(a, b);
  return {x, v, true};
}

// Largest R1 with (R1, m R1) in the c-constrained GMAC region for a
// fixed phase-power split of the solo user. Every constraint is an
// upper bound on R1 along the ray, with a separate branch for rates
// small enough that the solo-phase deflation clamps to zero.
double gmac_ray_r1(const GmacParams& params, double c, double m, double p_joint,
                   double p_solo) {
  const double g_solo = gamma(p_solo);
  if (c >= 1.0) {
    const double g1 = gamma(p_joint);
    const double g2 = gamma(params.p2);
    const double gs = gamma(p_joint + params.p2);
    const double clamp = c > 1.0 ? (c - 1.0) * g_solo / c : 0.0;
    const double rb =
        std::min({(g1 + (c - 1.0) * g_solo) / c, g2 / m, (gs + (c - 1.0) * g_solo) / (c + m)});
    return rb >= clamp ? rb : std::min(clamp, g2 / m);
  }
  const double g1 = gamma(params.p1);
  const double g2 = gamma(p_joint);
  const double gs = gamma(params.p1 + p_joint);
  const double clamp = (1.0 - c) * g_solo / m;
  const double rb = std::min(
      {g1, (c * g2 + (1.0 - c) * g_solo) / m, (c * gs + (1.0 - c) * g_solo) / (c + m)});
  return rb >= clamp ? rb : std::min(clamp, g1);
}

TimePair mac_diag_point(const GmacParams& params, const Load& load) {
  const RatePair r_c = gmac_capacity_region(params).ray_intersection(load.tau2 / load.tau1);
  return map_g(2, r_c, load, gamma(params.p1));
}

}  // namespace

std::pair<TimePair, TimePair> gmac_block_rays(const GmacParams& params,
                                              const Load& load, int subregion) {
  if (subregion != 1 && subregion != 2)
    throw std::invalid_argument("gmac_block_rays: subregion must be 1 or 2");
  const TimePair d_c = mac_diag_point(params, load);
  const double solo1 = load.tau1 / gamma(params.p1);
  const double solo2 = load.tau2 / gamma(params.p2);
  if (subregion == 2) return {d_c, TimePair(solo1 + solo2, solo2)};
  return {d_c, TimePair(solo1, solo1 + solo2)};
}

RatePair gmac_block_ray_rate(const GmacParams& params, const Load& load, double c,
                             const PowerSplit& split) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::domain_error("gmac_block_ray_rate: ratio must be positive and finite");
  const double joint_share = std::min(c, 1.0 / c);
  if (std::abs(split.fraction - joint_share) > 1e-12 * std::max(1.0, joint_share))
    throw std::invalid_argument("gmac_block_ray_rate: split fraction mismatch");
  const double budget = c >= 1.0 ? params.p1 : params.p2;
  if (!split.satisfies_budget(budget))
    throw std::invalid_argument("gmac_block_ray_rate: split violates the budget");
  const double m = (load.tau2 / load.tau1) * c;
  const double r1 = gmac_ray_r1(params, c, m, split.p_first, split.p_second);
  return RatePair(r1, m * r1);
}

std::pair<PowerSplit, RatePair> gmac_optimal_split(const GmacParams& params,
                                                   const Load& load, double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::domain_error("gmac_optimal_split: ratio must be positive and finite");
  const double m = (load.tau2 / load.tau1) * c;
  if (c == 1.0) {
    // The solo phase has zero length; the split is forced to the joint
    // budget and the intersection is the per-symbol one.
    const PowerSplit split(params.p1, params.p1, 1.0);
    const double r1 = gmac_ray_r1(params, 1.0, m, params.p1, params.p1);
    return {split, RatePair(r1, m * r1)};
  }
  const double solo_budget = c > 1.0 ? params.p1 : params.p2;
  const double fraction = std::min(c, 1.0 / c);
  const double x_max = solo_budget / fraction;
  const auto solo_power = [&](double x) {
    return std::max((solo_budget - fraction * x) / (1.0 - fraction), 0.0);
  };
  const auto objective = [&](double x) {
    return gmac_ray_r1(params, c, m, x, solo_power(x));
  };
  const Search1D best = maximize_1d(objective, 0.0, x_max);
  // The ray intersection scales both coordinates together, so the same
  // split maximizes both; a small perturbation must not improve either.
  assert(objective(std::min(best.x + 1e-4 * solo_budget, x_max)) <=
         best.value * (1.0 + 1e-9));
  assert(objective(std::max(best.x - 1e-4 * solo_budget, 0.0)) <=
         best.value * (1.0 + 1e-9));
  const PowerSplit split(best.x, solo_power(best.x), fraction);
  return {split, RatePair(best.value, m * best.value)};
}

BlockPowerTrace gmac_block_boundary(const GmacParams& params, const Load& load,
                                    std::size_t n_grid) {
  if (n_grid < 2) throw std::invalid_argument("gmac_block_boundary: n_grid < 2");
  const auto [d_c2, d_a] = gmac_block_rays(params, load, 2);
  const auto [d_c1, d_b] = gmac_block_rays(params, load, 1);
  (void)d_c1;
  const double c_a = d_a.d1 / d_a.d2;
  const double c_b = d_b.d1 / d_b.d2;

  BlockPowerTrace trace;
  const auto add = [&](double c) {
    auto [split, rate] = gmac_optimal_split(params, load, c);
    trace.c_grid.push_back(c);
    trace.points.emplace_back(load.tau1 / rate.r1, load.tau2 / rate.r2);
    trace.splits.push_back(split);
  };
  for (std::size_t i = 0; i < n_grid; ++i)
    add(c_b + (1.0 - c_b) * static_cast<double>(i) / static_cast<double>(n_grid - 1));
  for (std::size_t i = 1; i < n_grid; ++i)
    add(1.0 + (c_a - 1.0) * static_cast<double>(i) / static_cast<double>(n_grid - 1));
  return trace;
}

namespace {

// Largest R1 with the ray point inside the c-constrained GBC region for
// fixed joint/solo phase powers (normalized orientation). The boundary
// is curved, so this brackets and bisects the inclusive membership test.
double gbc_ray_r1(const GbcParams& params, double c, double m, double p_joint,
                  double p_solo) {
  const double cap1 = gamma(params.h1 * p_joint);
  const double cap2 = gamma(params.h2 * p_joint);
  const auto member = [&](double r1_val) {
    if (r1_val < 0.0) return true;
    const double R2 = m * r1_val;
    double u, v;  // deflated test point
    if (c >= 1.0) {
      u = std::max(c * r1_val - (c - 1.0) * gamma(params.h1 * p_solo), 0.0);
      v = R2;
    } else {
      u = r1_val;
      v = std::max(R2 / c - (1.0 / c - 1.0) * gamma(params.h2 * p_solo), 0.0);
    }
    if (u > cap1 + 1e-12 || v > cap2 + 1e-12) return false;
    if (p_joint <= 0.0) return u <= 1e-15 && v <= 1e-15;
    const double f =
        v + gamma(inverse_gamma(u) * params.h2 / params.h1) - cap2;
    return f <= 1e-12;
  };
  double hi = 1.0;
  while (member(hi)) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (member(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

RatePair gbc_block_ray_rate(const GbcParams& params, const Load& load, double c,
                            const PowerSplit& split) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::domain_error("gbc_block_ray_rate: ratio must be positive and finite");
  const double joint_share = std::min(c, 1.0 / c);
  if (std::abs(split.fraction - joint_share) > 1e-12 * std::max(1.0, joint_share))
    throw std::invalid_argument("gbc_block_ray_rate: split fraction mismatch");
  if (!split.satisfies_budget(params.p))
    throw std::invalid_argument("gbc_block_ray_rate: split violates the budget");
  const double tau1 = params.swapped ? load.tau2 : load.tau1;
  const double tau2 = params.swapped ? load.tau1 : load.tau2;
  const double cn = params.swapped ? 1.0 / c : c;
  const double m = (tau2 / tau1) * cn;
  const double r1 = gbc_ray_r1(params, cn, m, split.p_first, split.p_second);
  return params.swapped ? RatePair(m * r1, r1) : RatePair(r1, m * r1);
}

BlockPowerTrace gbc_block_boundary(const GbcParams& params, const Load& load,
                                   std::size_t n_grid) {
  if (n_grid < 2) throw std::invalid_argument("gbc_block_boundary: n_grid < 2");
  const double tau1 = params.swapped ? load.tau2 : load.tau1;
  const double tau2 = params.swapped ? load.tau1 : load.tau2;
  const Load norm_load(tau1, tau2);
  const double solo1 = tau1 / gamma(params.h1 * params.p);
  const double solo2 = tau2 / gamma(params.h2 * params.p);
  const double c_a = (solo1 + solo2) / solo2;
  const double c_b = solo1 / (solo1 + solo2);

  BlockPowerTrace trace;
  const auto add = [&](double c) {
    const double m = (tau2 / tau1) * c;
    const double fraction = std::min(c, 1.0 / c);
    double best_r1;
    PowerSplit split(params.p, params.p, 1.0);
    if (c == 1.0) {
      best_r1 = gbc_ray_r1(params, c, m, params.p, params.p);
    } else {
      const double x_max = params.p / fraction;
      const auto solo_power = [&](double x) {
        return std::max((params.p - fraction * x) / (1.0 - fraction), 0.0);
      };
      const Search1D best = maximize_1d(
          [&](double x) { return gbc_ray_r1(params, c, m, x, solo_power(x)); }, 0.0,
          x_max);
      best_r1 = best.value;
      split = PowerSplit(best.x, solo_power(best.x), fraction);
    }
    trace.c_grid.push_back(c);
    trace.points.emplace_back(tau1 / best_r1, tau2 / (m * best_r1));
    trace.splits.push_back(split);
  };
  for (std::size_t i = 0; i < n_grid; ++i)
    add(c_b + (1.0 - c_b) * static_cast<double>(i) / static_cast<double>(n_grid - 1));
  for (std::size_t i = 1; i < n_grid; ++i)
    add(1.0 + (c_a - 1.0) * static_cast<double>(i) / static_cast<double>(n_grid - 1));

  if (params.swapped) {
    for (auto& p : trace.points) p = TimePair(p.d2, p.d1);
    for (auto& c : trace.c_grid) c = 1.0 / c;
    std::reverse(trace.c_grid.begin(), trace.c_grid.end());
    std::reverse(trace.points.begin(), trace.points.end());
    std::reverse(trace.splits.begin(), trace.splits.end());
  }
  return trace;
}

}  // namespace ctr

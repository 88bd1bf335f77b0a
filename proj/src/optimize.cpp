#include "ctr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctr {

WeightedObjective::WeightedObjective(double w_) : w(w_) {
  if (!std::isfinite(w) || w < 0.0 || w > 1.0)
    throw std::domain_error("WeightedObjective: weight must lie in [0, 1]");
}

Minimizer gmac_min_weighted(const GmacParams& params, const Load& load,
                            const WeightedObjective& obj) {
  const MacCorners corners = gmac_region_corners(params, load);
  const double g1 = gamma(params.p1);
  const double g2 = gamma(params.p2);
  const double gs = gamma(params.p1 + params.p2);
  double threshold;
  const char* case_name;
  switch (corners.kase) {
    case GmacCase::I:
      threshold = g1 / gs;
      case_name = "case-I";
      break;
    case GmacCase::II:
      threshold = load.tau1 / (load.tau1 + load.tau2);
      case_name = "case-II";
      break;
    case GmacCase::III:
    default:
      threshold = (gs - g2) / gs;
      case_name = "case-III";
      break;
  }
  const TimePair d = obj.w <= threshold ? corners.d_d : corners.d_e;
  std::string branch = std::string("gmac/") + case_name + "/" +
                       (obj.w <= threshold ? "corner-dD" : "corner-dE");
  if (obj.w == threshold) branch += " (tie with corner-dE)";
  return Minimizer{d, obj.value(d), std::move(branch)};
}

KappaPair gbc_kappa(const GbcParams& params, double p1_split) {
  if (!std::isfinite(p1_split) || p1_split < 0.0 || p1_split > params.p)
    throw std::domain_error("gbc_kappa: power split must lie in [0, P]");
  const double g = (1.0 / params.h1 + p1_split) / (1.0 / params.h2 + p1_split);
  const double rt1 = gamma(params.h1 * p1_split);
  const double rt2 = gamma(params.h2 * params.p) - gamma(params.h2 * p1_split);
  const double den = rt2 + g * rt1;
  const double a1 = g / den;
  const double a2 = 1.0 / den;
  // The interval endpoints attain 0 resp. 1 exactly; keep rounding from
  // stepping a ulp outside [0, 1].
  return KappaPair{std::clamp(1.0 - a2 * gamma(params.h2 * params.p), 0.0, 1.0),
                   std::clamp(a1 * gamma(params.h1 * params.p), 0.0, 1.0)};
}

double gbc_kappa_inverse(const GbcParams& params, int which, double w) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("gbc_kappa_inverse: which must be 1 or 2");
  const auto eval = [&](double p1) {
    const KappaPair k = gbc_kappa(params, p1);
    return which == 1 ? k.kappa1 : k.kappa2;
  };
  const double lo_val = eval(0.0);
  const double hi_val = eval(params.p);
  const double span_tol = 1e-9 * std::max(1.0, hi_val - lo_val);
  if (w < lo_val - span_tol || w > hi_val + span_tol)
    throw std::domain_error("gbc_kappa_inverse: weight outside the kappa range");
  double lo = 0.0, hi = params.p;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) < w)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

// Per-subregion solution in the normalized orientation.
Minimizer gbc_subregion_min(const GbcParams& params, const Load& norm_load,
                            const WeightedObjective& obj, int which, double p1c) {
  const double r1s = gamma(params.h1 * params.p);
  const double r2s = gamma(params.h2 * params.p);
  const auto boundary_rate = [&](double p1) {
    return RatePair(gamma(params.h1 * p1), r2s - gamma(params.h2 * p1));
  };
  const TimePair d_c = map_g(which, boundary_rate(p1c), norm_load,
                             which == 1 ? r2s : r1s);
  if (which == 1) {
    const double k_low = gbc_kappa(params, p1c).kappa1;
    const double k_high = gbc_kappa(params, params.p).kappa1;
    if (obj.w <= k_low)
      return Minimizer{d_c, obj.value(d_c), "gbc/subregion-1/corner-dC"};
    if (obj.w >= k_high) {
      const TimePair d_b(norm_load.tau1 / r1s, norm_load.tau1 / r1s + norm_load.tau2 / r2s);
      return Minimizer{d_b, obj.value(d_b), "gbc/subregion-1/corner-dB"};
    }
    const double p1 = gbc_kappa_inverse(params, 1, obj.w);
    const TimePair d = map_g(1, boundary_rate(p1), norm_load, r2s);
    return Minimizer{d, obj.value(d), "gbc/subregion-1/tangent"};
  }
  const double k_low = gbc_kappa(params, 0.0).kappa2;
  const double k_high = gbc_kappa(params, p1c).kappa2;
  if (obj.w <= k_low) {
    const TimePair d_a(norm_load.tau1 / r1s + norm_load.tau2 / r2s, norm_load.tau2 / r2s);
    return Minimizer{d_a, obj.value(d_a), "gbc/subregion-2/corner-dA"};
  }
  if (obj.w >= k_high)
    return Minimizer{d_c, obj.value(d_c), "gbc/subregion-2/corner-dC"};
  const double p1 = gbc_kappa_inverse(params, 2, obj.w);
  const TimePair d = map_g(2, boundary_rate(p1), norm_load, r1s);
  return Minimizer{d, obj.value(d), "gbc/subregion-2/tangent"};
}

}  // namespace

std::pair<Minimizer, Minimizer> gbc_subregion_minimizers(const GbcParams& params,
                                                         const Load& load,
                                                         const WeightedObjective& obj) {
  const Load norm_load(params.swapped ? load.tau2 : load.tau1,
                       params.swapped ? load.tau1 : load.tau2);
  const WeightedObjective norm_obj(params.swapped ? 1.0 - obj.w : obj.w);
  const double p1c = gbc_solve_p1c(params, load);
  Minimizer first = gbc_subregion_min(params, norm_load, norm_obj, 1, p1c);
  Minimizer second = gbc_subregion_min(params, norm_load, norm_obj, 2, p1c);
  if (params.swapped) {
    for (Minimizer* m : {&first, &second}) {
      m->d = TimePair(m->d.d2, m->d.d1);
      m->objective_value = obj.value(m->d);
      m->active_branch += " (user indices swapped)";
    }
    std::swap(first, second);  // subregion d1<=d2 stays the first slot
  }
  return {std::move(first), std::move(second)};
}

Minimizer gbc_min_weighted(const GbcParams& params, const Load& load,
                           const WeightedObjective& obj) {
  auto [first, second] = gbc_subregion_minimizers(params, load, obj);
  // Equal objectives return the first subregion's branch.
  return second.objective_value < first.objective_value ? second : first;
}

Minimizer generic_min_weighted(const BoundaryCurve& curve, const WeightedObjective& obj) {
  if (curve.curve_samples.empty())
    throw std::invalid_argument("generic_min_weighted: empty boundary curve");
  const TimePair* best = nullptr;
  double best_val = std::numeric_limits<double>::infinity();
  std::size_t best_idx = 0;
  std::size_t idx = 0;
  const auto consider = [&](const TimePair& d) {
    const double v = obj.value(d);
    if (v < best_val) {
      best_val = v;
      best = &d;
      best_idx = idx;
    }
    ++idx;
  };
  consider(curve.vertical_ray_origin);
  consider(curve.horizontal_ray_origin);
  consider(curve.diag_ray_origin);
  for (const auto& d : curve.curve_samples) consider(d);
  std::string branch;
  if (best_idx == 0)
    branch = "sampled/vertical-ray-origin";
  else if (best_idx == 1)
    branch = "sampled/horizontal-ray-origin";
  else if (best_idx == 2)
    branch = "sampled/diag-ray-origin";
  else
    branch = "sampled/curve[" + std::to_string(best_idx - 3) + "]";
  return Minimizer{*best, best_val, std::move(branch)};
}

}  // namespace ctr

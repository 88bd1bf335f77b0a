#include "ctr/ct_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ctr/constrained.hpp"

namespace ctr {

namespace {

// Caps of a MAC-shaped pentagon: axis caps and sum cap. The GMAC and
// the strong-regime GIC share all completion-time machinery through
// this triple.
struct MacCaps {
  double g1, g2, gsum;
};

MacCaps gmac_caps(const GmacParams& p) {
  return {gamma(p.p1), gamma(p.p2), gamma(p.p1 + p.p2)};
}

GmacCase mac_case(const MacCaps& caps, const Load& load) {
  const double ratio = load.tau2 / load.tau1;
  const double q1 = (caps.gsum - caps.g1) / caps.g1;
  const double q2 = caps.g2 / (caps.gsum - caps.g2);
  if (ratio <= q1) return GmacCase::I;
  if (ratio >= q2) return GmacCase::III;
  return GmacCase::II;
}

// Inclusive boundary slack, wide enough that 12-significant-digit
// serialization round-trips keep boundary points members.
double slack_for(double scale) { return 1e-11 * std::max(1.0, scale); }

// Union of the two convex subregions:
//   D1 = {d2 >= d1, d1 >= tau1/g1, d2 >= tau2/g2, facetB},
//   D2 = {d1 >= d2, d1 >= tau1/g1, d2 >= tau2/g2, facetA},
// where facetA is the G2 image of the sum facet and facetB its G1
// image. Each facet constraint is implied in the cases where the sum
// facet does not reach that subregion, so the same formula serves all
// three cases.
bool mac_member(const MacCaps& caps, const Load& load, const TimePair& d) {
  if (!d.finite()) throw std::domain_error("mac_member: infinite completion time");
  const double eps = slack_for(std::max({d.d1, d.d2, load.tau1 + load.tau2}));
  const double base1 = load.tau1 / caps.g1;
  const double base2 = load.tau2 / caps.g2;
  if (d.d1 < base1 - eps || d.d2 < base2 - eps) return false;
  const double total = load.tau1 + load.tau2;
  const bool has_sum = caps.gsum < caps.g1 + caps.g2 - 1e-15;
  const double facet_a =
      has_sum ? caps.g1 * d.d1 + (caps.gsum - caps.g1) * d.d2 : total;
  const double facet_b =
      has_sum ? (caps.gsum - caps.g2) * d.d1 + caps.g2 * d.d2 : total;
  const bool in1 = d.d2 >= d.d1 - eps && facet_b >= total - eps;
  const bool in2 = d.d1 >= d.d2 - eps && facet_a >= total - eps;
  return in1 || in2;
}

struct MacCornersRaw {
  GmacCase kase;
  TimePair d_a, d_b, d_c, d_d, d_e;
};

MacCornersRaw mac_corners(const MacCaps& caps, const Load& load) {
  const double g1 = caps.g1, g2 = caps.g2, gs = caps.gsum;
  const double t1 = load.tau1, t2 = load.tau2;
  const GmacCase kase = mac_case(caps, load);
  const TimePair d_a(t1 / g1 + t2 / g2, t2 / g2);
  const TimePair d_b(t1 / g1, t1 / g1 + t2 / g2);
  const double phi1 = (t1 + t2 - (gs - g1) * t2 / g2) / g1;
  const double phi2 = (t1 + t2 - (gs - g2) * t1 / g1) / g2;
  TimePair d_d = kase == GmacCase::III ? TimePair(t1 / (gs - g2), t2 / g2)
                                       : TimePair(phi1, t2 / g2);
  TimePair d_e = kase == GmacCase::I ? TimePair(t1 / g1, t2 / (gs - g1))
                                     : TimePair(t1 / g1, phi2);
  double dc;
  switch (kase) {
    case GmacCase::I:
      dc = t1 / g1;
      break;
    case GmacCase::II:
      dc = (t1 + t2) / gs;
      break;
    case GmacCase::III:
    default:
      dc = t2 / g2;
      break;
  }
  return {kase, d_a, d_b, TimePair(dc, dc), d_d, d_e};
}

// Boundary point on the ray d1/d2 = c: the largest of the per-constraint
// lower bounds on d2 along the ray, using the facet of the subregion
// the ray lies in.
TimePair mac_ray_point(const MacCaps& caps, const Load& load, double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::domain_error("ray ratio must be positive and finite");
  const double t1 = load.tau1, t2 = load.tau2;
  const double a1 = c >= 1.0 ? caps.g1 : caps.gsum - caps.g2;
  const double a2 = c >= 1.0 ? caps.gsum - caps.g1 : caps.g2;
  double s = std::max(t1 / (caps.g1 * c), t2 / caps.g2);
  if (caps.gsum < caps.g1 + caps.g2 - 1e-15)
    s = std::max(s, (t1 + t2) / (c * a1 + a2));
  return TimePair(c * s, s);
}

std::vector<TimePair> interpolate_chain(const std::vector<TimePair>& corners,
                                        std::size_t samples_per_arc) {
  std::vector<TimePair> out;
  for (std::size_t k = 0; k + 1 < corners.size(); ++k) {
    const TimePair& a = corners[k];
    const TimePair& b = corners[k + 1];
    const std::size_t n = std::max<std::size_t>(samples_per_arc, 2);
    for (std::size_t i = 0; i < n; ++i) {
      if (k > 0 && i == 0) continue;  // shared corner
      const double t = static_cast<double>(i) / static_cast<double>(n - 1);
      out.emplace_back(a.d1 + t * (b.d1 - a.d1), a.d2 + t * (b.d2 - a.d2));
    }
  }
  return out;
}

}  // namespace

GmacCase gmac_case(const GmacParams& params, const Load& load) {
  return mac_case(gmac_caps(params), load);
}

bool gmac_region_member(const GmacParams& params, const Load& load,
                        const TimePair& d) {
  return mac_member(gmac_caps(params), load, d);
}

MacCorners gmac_region_corners(const GmacParams& params, const Load& load) {
  const MacCornersRaw raw = mac_corners(gmac_caps(params), load);
  return {raw.kase, raw.d_a, raw.d_b, raw.d_c, raw.d_d, raw.d_e};
}

BoundaryCurve gmac_region_boundary(const GmacParams& params, const Load& load,
                                   std::size_t samples_per_arc) {
  if (samples_per_arc < 2)
    throw std::invalid_argument("gmac_region_boundary: need at least 2 samples");
  const MacCornersRaw c = mac_corners(gmac_caps(params), load);
  std::vector<TimePair> chain;
  switch (c.kase) {
    case GmacCase::I:
      chain = {c.d_b, c.d_c, c.d_e, c.d_d, c.d_a};
      break;
    case GmacCase::II:
      chain = {c.d_b, c.d_e, c.d_c, c.d_d, c.d_a};
      break;
    case GmacCase::III:
    default:
      chain = {c.d_b, c.d_e, c.d_d, c.d_c, c.d_a};
      break;
  }
  BoundaryCurve curve{c.d_b, c.d_a, c.d_c, interpolate_chain(chain, samples_per_arc),
                      nullptr};
  curve.member_fn = [params, load](const TimePair& d) {
    return gmac_region_member(params, load, d);
  };
  return curve;
}

TimePair gmac_ray_boundary_point(const GmacParams& params, const Load& load,
                                 double c) {
  return mac_ray_point(gmac_caps(params), load, c);
}

double gbc_solve_p1c(const GbcParams& params, const Load& load) {
  const double tau1 = params.swapped ? load.tau2 : load.tau1;
  const double tau2 = params.swapped ? load.tau1 : load.tau2;
  const double target = tau2 / tau1;
  const double r2_cap = gamma(params.h2 * params.p);
  // ratio(P1) = (gamma(h2 P) - gamma(h2 P1)) / gamma(h1 P1) falls
  // strictly from +inf to 0 on (0, P].
  double lo = 0.0, hi = params.p;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * std::max(1.0, params.p); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double den = gamma(params.h1 * mid);
    if (den == 0.0 || (r2_cap - gamma(params.h2 * mid)) / den > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

// d1 coordinate of G2 applied to the GBC boundary point at split p1
// (normalized orientation).
double gbc_second_d1_bound(const GbcParams& params, double tau1, double tau2,
                           double p1) {
  const double r1s = gamma(params.h1 * params.p);
  const double r1 = gamma(params.h1 * p1);
  const double r2 = gamma(params.h2 * params.p) - gamma(params.h2 * p1);
  return tau1 / r1s + (r1s - r1) * tau2 / (r1s * r2);
}

// d2 coordinate of G1 applied to the boundary point at split p1.
double gbc_first_d2_bound(const GbcParams& params, double tau1, double tau2,
                          double p1) {
  const double r2s = gamma(params.h2 * params.p);
  return tau2 / r2s + gamma(params.h2 * p1) * tau1 / (r2s * gamma(params.h1 * p1));
}

}  // namespace

GbcRegion::GbcRegion(const GbcParams& params, const Load& load)
    : params_(params),
      tau1_(params.swapped ? load.tau2 : load.tau1),
      tau2_(params.swapped ? load.tau1 : load.tau2),
      p1c_(gbc_solve_p1c(params, load)),
      collapse_valid_(true) {
  // Monotonicity self-check for the d1 >= d2 subregion: the d1 bound
  // must be non-increasing in P1 over [0, P_{1,C}] for the collapse to
  // pick the binding split directly.
  const int n = 256;
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    const double p1 = p1c_ * i / n;
    const double v = gbc_second_d1_bound(params_, tau1_, tau2_, p1);
    if (!std::isfinite(v)) break;
    if (v > prev * (1.0 + 1e-9)) {
      collapse_valid_ = false;
      break;
    }
    prev = v;
  }
}

bool GbcRegion::in_first_subregion(double d1, double d2) const {
  const double eps = slack_for(std::max({d1, d2, tau1_ + tau2_}));
  if (d2 < d1 - eps) return false;
  const double need = inverse_gamma(tau1_ / d1) / params_.h1;
  if (need > params_.p * (1.0 + 1e-12)) return false;  // below the solo bound
  const double p1 = std::min(std::max(p1c_, need), params_.p);
  return d2 >= gbc_first_d2_bound(params_, tau1_, tau2_, p1) - eps;
}

bool GbcRegion::in_second_subregion(double d1, double d2) const {
  const double eps = slack_for(std::max({d1, d2, tau1_ + tau2_}));
  if (d1 < d2 - eps) return false;
  const double r2s = gamma(params_.h2 * params_.p);
  if (tau2_ / d2 > r2s * (1.0 + 1e-12)) return false;
  const double p1max =
      std::max(0.0, inverse_gamma(std::max(r2s - tau2_ / d2, 0.0)) / params_.h2);
  const double hi = std::min(p1c_, p1max);
  if (collapse_valid_)
    return d1 >= gbc_second_d1_bound(params_, tau1_, tau2_, hi) - eps;
  // Fallback: scan the feasible splits for the smallest d1 bound, then
  // refine around the best grid point.
  const int n = 1024;
  double best = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i <= n; ++i) {
    const double v = gbc_second_d1_bound(params_, tau1_, tau2_, hi * i / n);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  double lo_p = hi * std::max(0, best_i - 1) / n;
  double hi_p = hi * std::min(n, best_i + 1) / n;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo_p + (hi_p - lo_p) / 3.0;
    const double m2 = hi_p - (hi_p - lo_p) / 3.0;
    if (gbc_second_d1_bound(params_, tau1_, tau2_, m1) <
        gbc_second_d1_bound(params_, tau1_, tau2_, m2))
      hi_p = m2;
    else
      lo_p = m1;
  }
  best = std::min(best, gbc_second_d1_bound(params_, tau1_, tau2_, 0.5 * (lo_p + hi_p)));
  return d1 >= best - eps;
}

bool GbcRegion::contains(const TimePair& d) const {
  if (!d.finite()) throw std::domain_error("GbcRegion: infinite completion time");
  const double d1 = params_.swapped ? d.d2 : d.d1;
  const double d2 = params_.swapped ? d.d1 : d.d2;
  return in_first_subregion(d1, d2) || in_second_subregion(d1, d2);
}

bool gbc_region_member(const GbcParams& params, const Load& load, const TimePair& d) {
  return GbcRegion(params, load).contains(d);
}

BoundaryCurve gbc_region_boundary(const GbcParams& params, const Load& load,
                                  std::size_t samples_per_arc) {
  if (samples_per_arc < 2)
    throw std::invalid_argument("gbc_region_boundary: need at least 2 samples");
  const double tau1 = params.swapped ? load.tau2 : load.tau1;
  const double tau2 = params.swapped ? load.tau1 : load.tau2;
  const Load norm_load(tau1, tau2);
  const double p1c = gbc_solve_p1c(params, load);
  const double r1s = gamma(params.h1 * params.p);
  const double r2s = gamma(params.h2 * params.p);
  const auto boundary_rate = [&](double p1) {
    return RatePair(gamma(params.h1 * p1), r2s - gamma(params.h2 * p1));
  };

  std::vector<TimePair> samples;
  const std::size_t n = std::max<std::size_t>(samples_per_arc, 2);
  // Arc d_B -> d_C: G1 over splits from P down to P_{1,C}.
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    samples.push_back(map_g(1, boundary_rate(params.p + t * (p1c - params.p)),
                            norm_load, r2s));
  }
  // Arc d_C -> d_A: G2 over splits from P_{1,C} down to 0.
  for (std::size_t i = 1; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    samples.push_back(map_g(2, boundary_rate(p1c * (1.0 - t)), norm_load, r1s));
  }

  TimePair d_b(tau1 / r1s, tau1 / r1s + tau2 / r2s);
  TimePair d_a(tau1 / r1s + tau2 / r2s, tau2 / r2s);
  TimePair d_c = map_g(1, boundary_rate(p1c), norm_load, r2s);

  if (params.swapped) {
    std::swap(d_a, d_b);
    d_a = TimePair(d_a.d2, d_a.d1);
    d_b = TimePair(d_b.d2, d_b.d1);
    d_c = TimePair(d_c.d2, d_c.d1);
    std::reverse(samples.begin(), samples.end());
    for (auto& s : samples) s = TimePair(s.d2, s.d1);
  }
  BoundaryCurve curve{d_b, d_a, d_c, std::move(samples), nullptr};
  curve.member_fn = [params, load](const TimePair& d) {
    return gbc_region_member(params, load, d);
  };
  return curve;
}

TimePair gbc_ray_boundary_point(const GbcParams& params, const Load& load, double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::domain_error("gbc_ray_boundary_point: ratio must be positive");
  const GbcRegion region(params, load);
  // Membership along d = s (c, 1) is monotone in s; bracket then bisect.
  double hi = 1.0;
  for (int i = 0; i < 200 && !region.contains(TimePair(c * hi, hi)); ++i) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= 0.0) break;
    if (region.contains(TimePair(c * mid, mid)))
      hi = mid;
    else
      lo = mid;
  }
  return TimePair(c * hi, hi);
}

GicMembership gic_region_member(const GicParams& params, const Load& load,
                                const TimePair& d) {
  const Regime regime = gic_regime(params);
  if (regime == Regime::Weak) {
    const GicBounds bounds = etkin_tse_wang_weak_bounds(params);
    return gic_region_member(params, load, d, bounds.inner, bounds.outer);
  }
  if (regime == Regime::Mixed)
    throw std::domain_error(
        "gic_region_member: supply inner/outer bound regions for the mixed regime");
  if (!d.finite())
    throw std::domain_error("gic_region_member: infinite completion time");
  GicMembership m{true, false, false, false};
  if (regime == Regime::VeryStrong) {
    const double eps = slack_for(std::max(d.d1, d.d2));
    m.member = d.d1 >= load.tau1 / gamma(params.p1) - eps &&
               d.d2 >= load.tau2 / gamma(params.p2) - eps;
    return m;
  }
  const MacCaps caps{gamma(params.p1), gamma(params.p2),
                     std::min(gamma(params.p1 + params.b * params.p2),
                              gamma(params.a * params.p1 + params.p2))};
  m.member = mac_member(caps, load, d);
  return m;
}

GicMembership gic_region_member(const GicParams& params, const Load& load,
                                const TimePair& d, const PiecewiseLinearRegion& inner,
                                const PiecewiseLinearRegion& outer) {
  if (!d.finite())
    throw std::domain_error("gic_region_member: infinite completion time");
  const ConstrainedRatePoint pt(load.tau1 / d.d1, load.tau2 / d.d2, d.d1 / d.d2);
  const auto [in_inner, in_outer] =
      gic_constrained_member_bounds(inner, outer, params.p1, params.p2, pt);
  return GicMembership{false, false, in_inner, in_outer};
}

BoundaryCurve generic_ct_boundary(const PiecewiseLinearRegion& region, double r1_star,
                                  double r2_star, const Load& load,
                                  std::size_t samples_per_arc) {
  if (samples_per_arc < 2)
    throw std::invalid_argument("generic_ct_boundary: need at least 2 samples");
  const double tol = 1e-9 * std::max({1.0, region.cap1(), region.cap2()});
  if (r1_star < region.cap1() - tol || r2_star < region.cap2() - tol)
    throw std::domain_error(
        "generic_ct_boundary: solo rates must cover the region's axis caps");

  const double slope = load.tau2 / load.tau1;
  const RatePair r_c = region.ray_intersection(slope);
  const auto& verts = region.vertices();

  // Polylines r_B -> r_C (below the ray, mapped by G1) and r_C -> r_A
  // (above the ray, mapped by G2). The split is by ray side, not by
  // r1, so vertices sharing r1 with r_C on a vertical facet land on
  // the correct arc.
  const auto ray_side = [&](const RatePair& v) {
    return v.r2 - slope * v.r1;  // negative below the ray
  };
  const double side_tol = tol * (1.0 + slope);
  std::vector<RatePair> below{verts.back()};
  for (std::size_t i = verts.size() - 1; i-- > 0;) {
    const RatePair& v = verts[i];
    if (ray_side(v) < -side_tol) below.push_back(v);
  }
  below.push_back(r_c);
  std::vector<RatePair> above{r_c};
  for (std::size_t i = verts.size(); i-- > 0;) {
    const RatePair& v = verts[i];
    if (ray_side(v) > side_tol) above.push_back(v);
  }

  const auto sample_polyline = [&](const std::vector<RatePair>& chain, int which,
                                   double r_star) {
    std::vector<double> cum{0.0};
    for (std::size_t i = 1; i < chain.size(); ++i)
      cum.push_back(cum.back() + std::hypot(chain[i].r1 - chain[i - 1].r1,
                                            chain[i].r2 - chain[i - 1].r2));
    const double total = cum.back();
    std::vector<double> stops;
    const std::size_t n = std::max<std::size_t>(samples_per_arc, 2);
    for (std::size_t i = 0; i < n; ++i)
      stops.push_back(total * static_cast<double>(i) / static_cast<double>(n - 1));
    for (double c : cum) stops.push_back(c);  // keep exact facet corners
    std::sort(stops.begin(), stops.end());
    std::vector<TimePair> out;
    std::size_t seg = 0;
    for (double s : stops) {
      while (seg + 2 < cum.size() && s > cum[seg + 1]) ++seg;
      const double len = cum[seg + 1] - cum[seg];
      const double t = len > 0.0 ? std::clamp((s - cum[seg]) / len, 0.0, 1.0) : 0.0;
      const RatePair r(chain[seg].r1 + t * (chain[seg + 1].r1 - chain[seg].r1),
                       chain[seg].r2 + t * (chain[seg + 1].r2 - chain[seg].r2));
      const TimePair d = map_g(which, r, load, r_star);
      if (!out.empty() && std::abs(d.d1 - out.back().d1) <= 1e-14 * (1.0 + d.d1) &&
          std::abs(d.d2 - out.back().d2) <= 1e-14 * (1.0 + d.d2))
        continue;
      out.push_back(d);
    }
    return out;
  };

  std::vector<TimePair> curve = sample_polyline(below, 1, r2_star);
  std::vector<TimePair> upper = sample_polyline(above, 2, r1_star);
  curve.insert(curve.end(), upper.begin() + (upper.empty() ? 0 : 1), upper.end());

  const TimePair d_b = map_g(1, verts.back(), load, r2_star);
  const TimePair d_a = map_g(2, verts.front(), load, r1_star);
  const TimePair d_c = map_g(1, r_c, load, r2_star);

  BoundaryCurve out{d_b, d_a, d_c, std::move(curve), nullptr};
  out.member_fn = [region, r1_star, r2_star, load](const TimePair& d) {
    if (!d.finite()) throw std::domain_error("member_fn: infinite completion time");
    const ConstrainedRatePoint pt(load.tau1 / d.d1, load.tau2 / d.d2, d.d1 / d.d2);
    return mac_constrained_member(region, r2_star, r1_star, pt);
  };
  return out;
}

}  // namespace ctr

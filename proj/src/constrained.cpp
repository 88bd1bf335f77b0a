#include "ctr/constrained.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace ctr {

namespace {

constexpr double kMembershipSlack = 1e-12;

double clamp_nonneg(double x) { return std::max(x, 0.0); }

// Deflated test point for c <= 1: (R1, [R2/c - (1/c - 1) r2*]+).
RatePair deflate_low(const ConstrainedRatePoint& pt, double r2_star) {
  return RatePair(pt.R1, clamp_nonneg(pt.R2 / pt.c - (1.0 / pt.c - 1.0) * r2_star));
}

// Deflated test point for c >= 1: ([c R1 - (c - 1) r1*]+, R2).
RatePair deflate_high(const ConstrainedRatePoint& pt, double r1_star) {
  return RatePair(clamp_nonneg(pt.c * pt.R1 - (pt.c - 1.0) * r1_star), pt.R2);
}

}  // namespace

ConstrainedRatePoint::ConstrainedRatePoint(double R1_, double R2_, double c_)
    : R1(R1_), R2(R2_), c(c_) {
  if (!std::isfinite(R1) || !std::isfinite(R2) || R1 < 0.0 || R2 < 0.0)
    throw std::domain_error("ConstrainedRatePoint: rates must be non-negative");
  if (!std::isfinite(c) || c <= 0.0)
    throw std::domain_error("ConstrainedRatePoint: block-length ratio must be positive");
}

PowerSplit::PowerSplit(double p_first_, double p_second_, double fraction_)
    : p_first(p_first_), p_second(p_second_), fraction(fraction_) {
  if (!std::isfinite(p_first) || !std::isfinite(p_second) || p_first < 0.0 ||
      p_second < 0.0)
    throw std::domain_error("PowerSplit: phase powers must be non-negative");
  if (!std::isfinite(fraction) || fraction <= 0.0 || fraction > 1.0)
    throw std::domain_error("PowerSplit: fraction must lie in (0, 1]");
}

bool PowerSplit::satisfies_budget(double budget, double rel_tol) const {
  const double avg = fraction * p_first + (1.0 - fraction) * p_second;
  return std::abs(avg - budget) <= rel_tol * std::max(1.0, std::abs(budget));
}

bool mac_constrained_member(const PiecewiseLinearRegion& region, double r2_star,
                            double r1_star, const ConstrainedRatePoint& pt) {
  if (pt.c <= 1.0) {
    const bool low = region.contains(deflate_low(pt, r2_star), kMembershipSlack);
    if (pt.c == 1.0) {
      // Both clauses must coincide at c = 1.
      assert(low == region.contains(deflate_high(pt, r1_star), kMembershipSlack));
    }
    return low;
  }
  return region.contains(deflate_high(pt, r1_star), kMembershipSlack);
}

bool gbc_constrained_member(const GbcParams& params, const ConstrainedRatePoint& pt,
                            GbcDeflation deflation) {
  // Work in the normalized orientation; a swapped construction exchanges
  // the point's user indices and inverts c.
  const ConstrainedRatePoint q =
      params.swapped ? ConstrainedRatePoint(pt.R2, pt.R1, 1.0 / pt.c) : pt;
  const double solo2 =
      deflation == GbcDeflation::GainScaled ? gamma(params.h2 * params.p) : gamma(params.p);
  const double solo1 =
      deflation == GbcDeflation::GainScaled ? gamma(params.h1 * params.p) : gamma(params.p);
  const auto in_region = [&](const RatePair& r) {
    // gbc_capacity_f expects caller order; pass normalized directly.
    const RatePair caller = params.swapped ? RatePair(r.r2, r.r1) : r;
    return gbc_capacity_f(params, caller) <= kMembershipSlack;
  };
  if (q.c <= 1.0) {
    const bool low = in_region(deflate_low(q, solo2));
    if (q.c == 1.0) assert(low == in_region(deflate_high(q, solo1)));
    return low;
  }
  return in_region(deflate_high(q, solo1));
}

std::pair<bool, bool> gic_constrained_member_bounds(
    const PiecewiseLinearRegion& inner, const PiecewiseLinearRegion& outer,
    double p1, double p2, const ConstrainedRatePoint& pt) {
  const double r1_star = gamma(p1);
  const double r2_star = gamma(p2);
  return {mac_constrained_member(inner, r2_star, r1_star, pt),
          mac_constrained_member(outer, r2_star, r1_star, pt)};
}

bool gmac_block_power_member(const GmacParams& params, const ConstrainedRatePoint& pt,
                             const PowerSplit& solo_split) {
  const double joint_share = std::min(pt.c, 1.0 / pt.c);
  if (std::abs(solo_split.fraction - joint_share) >
      1e-12 * std::max(1.0, joint_share))
    throw std::invalid_argument(
        "gmac_block_power_member: split fraction does not match the ratio c");
  const double solo_budget = pt.c <= 1.0 ? params.p2 : params.p1;
  if (!solo_split.satisfies_budget(solo_budget))
    throw std::invalid_argument(
        "gmac_block_power_member: split violates the solo user's power budget");
  if (pt.c <= 1.0) {
    // User 2 runs the joint phase at p_first and the solo phase at p_second.
    const PiecewiseLinearRegion joint =
        gmac_capacity_region(GmacParams(params.p1, std::max(solo_split.p_first, 1e-300)));
    const double solo_rate = gamma(solo_split.p_second);
    const RatePair t(pt.R1,
                     std::max(pt.R2 / pt.c - (1.0 / pt.c - 1.0) * solo_rate, 0.0));
    return joint.contains(t, kMembershipSlack);
  }
  const PiecewiseLinearRegion joint =
      gmac_capacity_region(GmacParams(std::max(solo_split.p_first, 1e-300), params.p2));
  const double solo_rate = gamma(solo_split.p_second);
  const RatePair t(std::max(pt.c * pt.R1 - (pt.c - 1.0) * solo_rate, 0.0), pt.R2);
  return joint.contains(t, kMembershipSlack);
}

}  // namespace ctr

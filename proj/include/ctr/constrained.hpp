/**
 * Membership tests for c-constrained capacity regions, where the two
 * users' codewords span different block lengths with ratio c = n1/n2.
 *
 * The defining reduction: for c <= 1 the pair (R1, R2) is a member iff
 * (R1, [R2/c - (1/c - 1) r2*]+) lies in the standard capacity region,
 * where r2* is user 2's solo-phase point-to-point rate; for c >= 1 the
 * mirrored test applies with r1*. At c = 1 both clauses coincide.
 *
 * Boundary membership is inclusive with absolute slack 1e-12 (capacity
 * regions are closed). Pure functions over immutable values.
 */
#ifndef CTR_CONSTRAINED_HPP
#define CTR_CONSTRAINED_HPP

#include <utility>

#include "ctr/channel.hpp"

namespace ctr {

/// Rates defined over each user's own active window, plus the
/// block-length ratio c = n1/n2.
struct ConstrainedRatePoint {
  double R1;
  double R2;
  double c;

  ConstrainedRatePoint(double R1, double R2, double c);
};

/// Power allocation across the joint and solo phases of a two-phase
/// operation; `fraction` is the time share of the joint phase.
struct PowerSplit {
  double p_first;   // power during the joint phase
  double p_second;  // power during the solo phase
  double fraction;  // joint-phase time fraction, in (0, 1]

  PowerSplit(double p_first, double p_second, double fraction);

  /// fraction * p_first + (1 - fraction) * p_second == budget, within
  /// relative tolerance.
  bool satisfies_budget(double budget, double rel_tol = 1e-12) const;
};

/// c-constrained membership against an arbitrary standard capacity
/// region with solo rates r2_star (used for c <= 1) and r1_star (c >= 1).
bool mac_constrained_member(const PiecewiseLinearRegion& region, double r2_star,
                            double r1_star, const ConstrainedRatePoint& pt);

/// Selects the solo-phase deflation constant for the GBC test. The
/// gain-scaled form uses the receiving user's own capacity gamma(h_i P);
/// the unscaled form uses gamma(P) with no gain factor.
enum class GbcDeflation { GainScaled, Unscaled };

/// c-constrained membership for the GBC, evaluated through the capacity
/// boundary function. Takes the point in the caller's user order.
bool gbc_constrained_member(const GbcParams& params, const ConstrainedRatePoint& pt,
                            GbcDeflation deflation = GbcDeflation::GainScaled);

/// (member of inner bound, member of outer bound) for a weak/mixed GIC,
/// deflating with gamma(p2) for c <= 1 and gamma(p1) for c >= 1.
/// Requires inner to be contained in outer.
std::pair<bool, bool> gic_constrained_member_bounds(
    const PiecewiseLinearRegion& inner, const PiecewiseLinearRegion& outer,
    double p1, double p2, const ConstrainedRatePoint& pt);

/// c-constrained GMAC membership under an expected block power
/// constraint: the solo user's power may differ between the joint and
/// solo phases as long as the time-weighted average meets its budget.
/// `solo_split` describes the solo user (user 2 for c <= 1, user 1 for
/// c >= 1); its fraction must equal the joint-phase share min(c, 1/c)
/// and its budget identity must hold, else a precondition error.
bool gmac_block_power_member(const GmacParams& params, const ConstrainedRatePoint& pt,
                             const PowerSplit& solo_split);

}  // namespace ctr

#endif  // CTR_CONSTRAINED_HPP

/**
 * The affine maps G1/G2 between the standard rate plane and the
 * completion-time plane, their inverses, and the transport of line
 * coefficients under the maps.
 *
 * G_i sends a rate pair to the completion times obtained when user i
 * finishes first and the other user then transmits solo at its
 * point-to-point rate r*:
 *
 *   d_i = tau_i / r_i,
 *   d_j = tau_j / r_j* + (r_j* - r_j) tau_i / (r_j* r_i).
 *
 * All functions are pure; values are immutable.
 */
#ifndef CTR_CT_MAP_HPP
#define CTR_CT_MAP_HPP

#include "ctr/channel.hpp"

namespace ctr {

/// A point in the completion-time plane, channel uses per normalization
/// unit. Components are strictly positive; +infinity is the tagged
/// "never completes" sentinel and is excluded from arithmetic paths.
struct TimePair {
  double d1;
  double d2;

  TimePair(double d1, double d2);

  bool finite() const noexcept;

  /// Sentinel for a transmission that never completes (rate zero).
  static TimePair never() noexcept;
};

/// Coefficients of a line a1*x + a2*y = 1.
struct LineCoeffs {
  double a1;
  double a2;

  LineCoeffs(double a1, double a2);
};

/**
 * Applies G_which to a rate pair. r_star_other is the solo-phase
 * point-to-point rate of the user finishing second (user j).
 *
 * Guarantees d_which == tau_which / r_which exactly. A zero rate for the
 * finishing user returns the infinite-time sentinel; r_j > r_j* is a
 * domain error (the formula would drop below the solo bound).
 */
TimePair map_g(int which, const RatePair& r, const Load& load, double r_star_other);

struct InverseMapResult {
  RatePair r;
  /// Set when d lies beyond the band d_j <= tau_j / r_j* + d_i: the
  /// second user's rate clamps to zero and d is dominated by the band
  /// edge, yet region membership still holds by monotone closure.
  bool dominated;
};

/// Inverse of map_g on the valid band; round-trips with map_g to 1e-10
/// relative error. For G1 the band is d1 <= d2 <= tau2 / r2* + d1
/// (mirrored for G2); the lower edge is a precondition, the upper edge
/// clamps with the dominated flag.
InverseMapResult inverse_g(int which, const TimePair& d, const Load& load,
                           double r_star_other);

/// Transports a rate-plane line a1 r1 + a2 r2 = 1 to the time-plane line
/// a1' d1 + a2' d2 = 1 containing the G_which image of the line within
/// the map's domain. For which == 1:
///   a1' = (1 - a2 r2*) / (a1 tau1 + a2 tau2),
///   a2' = a2 r2* / (a1 tau1 + a2 tau2),
/// and symmetrically for which == 2. Throws on a degenerate denominator.
LineCoeffs transport_line(int which, const LineCoeffs& coeffs, const Load& load,
                          double r_star_other);

}  // namespace ctr

#endif  // CTR_CT_MAP_HPP

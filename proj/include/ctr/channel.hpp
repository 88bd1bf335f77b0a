/**
 * Channel parameter types, the gamma rate function, capacity-region
 * boundary functions for the two-user Gaussian multi-access / broadcast /
 * interference channels, interference-regime classification, and the
 * piecewise-linear region carrier used for all polyhedral rate regions.
 *
 * Everything here is an immutable value or a pure function; concurrent
 * use from any number of threads is safe.
 */
#ifndef CTR_CHANNEL_HPP
#define CTR_CHANNEL_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ctr {

/// gamma(x) = 0.5 * log2(1 + x), the Gaussian point-to-point rate in
/// bits per channel use. Throws std::domain_error for negative or
/// non-finite input.
double gamma(double x);

/// Inverse of gamma: returns x >= 0 with gamma(x) == y.
double inverse_gamma(double y);

/// Two-user Gaussian multi-access channel: transmit powers (linear scale).
struct GmacParams {
  double p1;
  double p2;

  GmacParams(double p1, double p2);
};

/// Two-user Gaussian broadcast channel. The constructor normalizes the
/// user order so that h1 >= h2 and records the swap; operations that
/// return user-indexed pairs undo the swap at the API boundary.
struct GbcParams {
  double h1;  // stronger receiver gain after normalization
  double h2;
  double p;       // total transmit power
  bool swapped;   // true if the caller's user indices were exchanged

  GbcParams(double h1, double h2, double p);
};

/// Two-user Gaussian interference channel with interfering link gains
/// a (user 1 seen at receiver 2) and b (user 2 seen at receiver 1).
struct GicParams {
  double p1;
  double p2;
  double a;
  double b;

  GicParams(double p1, double p2, double a, double b);
};

/// Interference regime classification.
enum class Regime { VeryStrong, Strong, Weak, Mixed };

/// Thrown when (a, b) falls in none of the four regimes, e.g.
/// a >= 1 + p2 combined with 1 <= b < 1 + p1.
struct UnsupportedRegime : std::domain_error {
  using std::domain_error::domain_error;
};

/// Per-user bit pool sizes normalizing completion time.
struct Load {
  double tau1;
  double tau2;

  Load(double tau1, double tau2);
};

/// A point in the standard rate plane, bits per channel use.
struct RatePair {
  double r1;
  double r2;

  RatePair(double r1, double r2);
};

/// One constraint a1*r1 + a2*r2 <= b of a rate region.
struct HalfPlane {
  double a1;
  double a2;
  double b;
};

/**
 * A bounded convex rate region { r >= 0 : a1*r1 + a2*r2 <= b for all
 * half-planes }, with a concave non-increasing upper-right boundary.
 *
 * The boundary vertex list is derived at construction, ordered by
 * increasing r1 from the r2-axis intercept to the r1-axis intercept,
 * and validated against the half-planes (1e-12 relative tolerance).
 */
class PiecewiseLinearRegion {
 public:
  explicit PiecewiseLinearRegion(std::vector<HalfPlane> halfplanes);

  const std::vector<HalfPlane>& halfplanes() const noexcept { return halfplanes_; }
  const std::vector<RatePair>& vertices() const noexcept { return vertices_; }

  /// max_i (a1*r1 + a2*r2 - b); <= 0 iff r is a member (given r >= 0).
  double support_residual(const RatePair& r) const;

  /// Inclusive membership with absolute slack (regions are closed).
  bool contains(const RatePair& r, double slack = 1e-12) const;

  /// Axis intercepts of the boundary: largest feasible r1 resp. r2.
  double cap1() const noexcept;
  double cap2() const noexcept;

  /// Boundary point on the ray r2 = slope * r1, slope > 0. A ray passing
  /// exactly through a vertex returns that vertex.
  RatePair ray_intersection(double slope) const;

  /// Region { r >= 0 : r + (bits, bits) is a member }; used for
  /// one-bit-gap inner bounds. Throws if the result is empty.
  PiecewiseLinearRegion deflated_per_user(double bits) const;

 private:
  std::vector<HalfPlane> halfplanes_;
  std::vector<RatePair> vertices_;
};

/// Piecewise-linear boundary function of the GMAC capacity pentagon:
/// f(r) <= 0 iff r is in the capacity region. The piece is selected by
/// the thresholds gamma(Pi/(1+Pj)) and gamma(Pi).
double gmac_capacity_f(const GmacParams& params, const RatePair& r);

/// The GMAC pentagon r1 <= gamma(P1), r2 <= gamma(P2),
/// r1 + r2 <= gamma(P1 + P2).
PiecewiseLinearRegion gmac_capacity_region(const GmacParams& params);

/// Superposition boundary point of the GBC capacity region for a given
/// power split p1_split in [0, P] assigned to the stronger user:
/// (gamma(h1*P1), gamma(h2*P) - gamma(h2*P1)), reported in the caller's
/// user order. Sweeping p1_split over [0, P] traces the full boundary.
RatePair gbc_boundary_point(const GbcParams& params, double p1_split);

/// Boundary function of the GBC capacity region:
/// f(r) = r2 + gamma((2^(2 r1) - 1) h2 / h1) - gamma(h2 P) in the
/// normalized orientation; <= 0 iff r is a member. Takes r in the
/// caller's user order.
double gbc_capacity_f(const GbcParams& params, const RatePair& r);

/// Classifies the interference regime, using the inequalities exactly as
/// written (no epsilon): very strong if a >= 1+P2 and b >= 1+P1; strong
/// if 1 <= a < 1+P2 and 1 <= b < 1+P1; weak if a < 1 and b < 1; mixed
/// if exactly one link gain is below 1. Throws UnsupportedRegime
/// otherwise.
Regime gic_regime(const GicParams& params);

/// Capacity region of a GIC in the strong or very strong regime: the
/// GMAC pentagon with the sum cap replaced by
/// min{gamma(P1 + b P2), gamma(a P1 + P2)}. In the very strong regime
/// the sum constraint is inactive and the region is the rectangle.
PiecewiseLinearRegion gic_strong_capacity_region(const GicParams& params);

/// Inner / outer capacity bounds for the weak regime.
struct GicBounds {
  PiecewiseLinearRegion inner;
  PiecewiseLinearRegion outer;
};

/**
 * Bundled weak-regime preset sourced from Etkin, Tse and Wang, "Gaussian
 * interference channel capacity to within one bit" (IEEE Trans. Inf.
 * Theory, 2008): the outer bound is their weak-regime genie-aided region
 * (with SNR1 = P1, SNR2 = P2, INR1 = b*P2, INR2 = a*P1), and the inner
 * bound deflates it by one bit per user. Any caller-supplied pair of
 * PiecewiseLinearRegion bounds can be used instead; downstream machinery
 * does not depend on this preset. Requires the weak regime.
 */
GicBounds etkin_tse_wang_weak_bounds(const GicParams& params);

}  // namespace ctr

#endif  // CTR_CHANNEL_HPP

/**
 * Construction and membership of completion-time regions.
 *
 * A completion-time region is the union of two convex subregions split
 * by the diagonal d1 = d2; the boundary of each subregion is the image
 * of the corresponding capacity-region boundary arc under G1 resp. G2,
 * completed by a vertical / horizontal axis ray and a 45-degree ray
 * from the diagonal point d_C.
 *
 * Closed forms are provided for the GMAC (three load-ratio cases) and
 * the GBC (parametric in the power split); the GIC is exact in the
 * very strong / strong regimes and bounded via a pair of rate regions
 * otherwise. A generic pipeline maps any piecewise-linear capacity
 * region to its completion-time boundary.
 *
 * Construction and membership are pure; BoundaryCurve is immutable
 * after construction, and grid evaluations may be parallelized by the
 * caller with no shared mutable state.
 */
#ifndef CTR_CT_REGION_HPP
#define CTR_CT_REGION_HPP

#include <functional>
#include <vector>

#include "ctr/channel.hpp"
#include "ctr/ct_map.hpp"

namespace ctr {

/// Which part of the capacity boundary the load ray tau2/tau1 crosses:
/// Case I through the right cap, Case II through the sum facet,
/// Case III through the top cap. Ties classify to the closed case.
enum class GmacCase { I, II, III };

/**
 * A completion-time region boundary: the three rays plus the
 * sampled curve tracing d_B -> d_C -> d_A with d1 non-decreasing and d2
 * non-increasing. d_C lies on the diagonal. member_fn is the exact
 * membership predicate of the region the curve bounds.
 */
struct BoundaryCurve {
  TimePair vertical_ray_origin;    // d_B
  TimePair horizontal_ray_origin;  // d_A
  TimePair diag_ray_origin;        // d_C
  std::vector<TimePair> curve_samples;
  std::function<bool(const TimePair&)> member_fn;
};

GmacCase gmac_case(const GmacParams& params, const Load& load);

/// Completion-time membership for the GMAC, evaluated as the union of
/// the two convex subregions (inclusive boundary).
bool gmac_region_member(const GmacParams& params, const Load& load, const TimePair& d);

/// The named corner points of the GMAC completion-time region.
struct MacCorners {
  GmacCase kase;
  TimePair d_a, d_b, d_c, d_d, d_e;
};
MacCorners gmac_region_corners(const GmacParams& params, const Load& load);

/// Closed-form GMAC boundary with samples_per_arc points on each
/// segment between consecutive corners.
BoundaryCurve gmac_region_boundary(const GmacParams& params, const Load& load,
                                   std::size_t samples_per_arc);

/// Boundary point of the GMAC completion-time region on the ray
/// d1 / d2 = c.
TimePair gmac_ray_boundary_point(const GmacParams& params, const Load& load, double c);

/// Solves (gamma(h2 P) - gamma(h2 P1)) / gamma(h1 P1) = tau2 / tau1 for
/// the power split P_{1,C} at which the capacity boundary meets the
/// load ray, by bisection on the strictly decreasing ratio (residual
/// below 1e-10). Indices refer to the normalized h1 >= h2 orientation.
double gbc_solve_p1c(const GbcParams& params, const Load& load);

/**
 * GBC completion-time region with an exact membership test.
 *
 * Membership resolves the existential over the power split P1 in closed
 * form: for the d1 <= d2 subregion the binding split is
 * max(P_{1,C}, (2^(2 tau1/d1) - 1)/h1) since the d2 lower bound grows
 * with P1; for the other subregion the analogous collapse is used but
 * guarded — construction samples the d1 bound over [0, P_{1,C}] and, if
 * it is not monotone, membership falls back to a 1024-point scan with
 * local refinement.
 */
class GbcRegion {
 public:
  GbcRegion(const GbcParams& params, const Load& load);

  bool contains(const TimePair& d) const;

  double p1c() const noexcept { return p1c_; }
  /// True when the guarded monotone collapse is in effect for the
  /// d1 >= d2 subregion (the scan fallback was not needed).
  bool collapse_valid() const noexcept { return collapse_valid_; }

 private:
  GbcParams params_;
  double tau1_, tau2_;  // normalized orientation
  double p1c_;
  bool collapse_valid_;

  bool in_first_subregion(double d1, double d2) const;
  bool in_second_subregion(double d1, double d2) const;
};

bool gbc_region_member(const GbcParams& params, const Load& load, const TimePair& d);

/// Parametric GBC boundary: samples_per_arc points uniform in the power
/// split on each of the two arcs d_B -> d_C and d_C -> d_A.
BoundaryCurve gbc_region_boundary(const GbcParams& params, const Load& load,
                                  std::size_t samples_per_arc);

/// Boundary point of the GBC completion-time region on the ray d1/d2 = c.
TimePair gbc_ray_boundary_point(const GbcParams& params, const Load& load, double c);

/// Membership result for a GIC: exact in the very strong and strong
/// regimes, an (inner, outer) bound pair in the weak and mixed regimes.
struct GicMembership {
  bool exact_known;
  bool member;        // valid when exact_known
  bool inner_member;  // valid when !exact_known
  bool outer_member;
};

/// Uses the bundled weak-regime bound preset; the mixed regime requires
/// caller-supplied bounds and throws here.
GicMembership gic_region_member(const GicParams& params, const Load& load,
                                const TimePair& d);

GicMembership gic_region_member(const GicParams& params, const Load& load,
                                const TimePair& d, const PiecewiseLinearRegion& inner,
                                const PiecewiseLinearRegion& outer);

/**
 * Maps a piecewise-linear capacity region to its completion-time
 * boundary: intersects the load ray with the region boundary to locate
 * r_C, maps the boundary arc below the ray through G1 and the arc above
 * through G2, and attaches the three rays. Samples are uniform in facet
 * arclength (facet vertices always included). Requires r1_star and
 * r2_star to be at least the region's axis caps.
 *
 * The attached member_fn is the definitional membership: d is a member
 * iff (tau1/d1, tau2/d2) at ratio c = d1/d2 passes the c-constrained
 * test against the region.
 */
BoundaryCurve generic_ct_boundary(const PiecewiseLinearRegion& region, double r1_star,
                                  double r2_star, const Load& load,
                                  std::size_t samples_per_arc);

}  // namespace ctr

#endif  // CTR_CT_REGION_HPP

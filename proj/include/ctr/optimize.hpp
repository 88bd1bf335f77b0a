/**
 * Weighted-sum completion-time minimization over a completion-time
 * region: closed-form corner/threshold solutions for the GMAC,
 * tangency-based solutions for the GBC via the kappa weight functions,
 * and a sampled-boundary minimizer used as a cross-check.
 *
 * Pure functions; unrestricted concurrent use.
 */
#ifndef CTR_OPTIMIZE_HPP
#define CTR_OPTIMIZE_HPP

#include <string>

#include "ctr/ct_region.hpp"

namespace ctr {

/// Objective w * d1 + (1 - w) * d2 with w in [0, 1].
struct WeightedObjective {
  double w;

  explicit WeightedObjective(double w);

  double value(const TimePair& d) const noexcept { return w * d.d1 + (1.0 - w) * d.d2; }
};

/// The tangent-line weight functions of the GBC power split:
/// kappa1 in [0, 1) and kappa2 in (0, 1], both strictly increasing.
struct KappaPair {
  double kappa1;
  double kappa2;
};

/// A weighted-sum minimizer: the optimal completion-time pair, its
/// objective value, and a label naming the branch (corner or tangency)
/// that produced it. Ties are noted in the label.
struct Minimizer {
  TimePair d;
  double objective_value;
  std::string active_branch;
};

/// Closed-form GMAC minimizer: picks corner d_D or d_E by comparing w
/// against the case threshold (w1 = g1/gsum in Case I,
/// w2 = tau1/(tau1+tau2) in Case II, w3 = (gsum-g2)/gsum in Case III).
/// Exactly at the threshold both corners attain the optimum; d_D is
/// returned with the tie noted.
Minimizer gmac_min_weighted(const GmacParams& params, const Load& load,
                            const WeightedObjective& obj);

/// kappa functions evaluated at a power split in [0, P]. Indices refer
/// to the normalized h1 >= h2 orientation.
KappaPair gbc_kappa(const GbcParams& params, double p1_split);

/// Inverts kappa_which by bisection on [0, P]; |kappa(P1) - w| < 1e-10.
/// Throws std::domain_error for w outside the attainable range.
double gbc_kappa_inverse(const GbcParams& params, int which, double w);

/// Per-subregion GBC solutions d_{s,1} and d_{s,2}: each subregion
/// yields d_C / d_B / d_A at the end ranges of w and the tangency point
/// G_i(r~(kappa_i^{-1}(w))) in between.
std::pair<Minimizer, Minimizer> gbc_subregion_minimizers(const GbcParams& params,
                                                         const Load& load,
                                                         const WeightedObjective& obj);

/// GBC minimizer: the smaller of the two subregion objectives; equal
/// objectives return the first subregion's branch.
Minimizer gbc_min_weighted(const GbcParams& params, const Load& load,
                           const WeightedObjective& obj);

/// Scans the sampled boundary (curve samples plus the three ray
/// origins) for the minimizing point; validates closed-form minimizers
/// within the sampling resolution.
Minimizer generic_min_weighted(const BoundaryCurve& curve, const WeightedObjective& obj);

}  // namespace ctr

#endif  // CTR_OPTIMIZE_HPP

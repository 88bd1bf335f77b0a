/**
 * Completion-time region boundary under expected block power
 * constraints, where the solo user may spend a different power in the
 * joint and solo phases as long as the time-weighted average meets its
 * budget.
 *
 * The boundary cannot be obtained by mapping the capacity region; it is
 * traced numerically in two steps: (1) fix the two rays from the
 * per-symbol diagonal point d_C and the sequential-transmission axis
 * point, (2) for each completion ratio c on a grid, maximize over
 * feasible phase-power splits the intersection of the constrained-rate
 * ray with the c-constrained region boundary, and map it back to the
 * time plane.
 *
 * Per-grid-point computations are independent pure functions; tracing
 * may be parallelized across the grid by the caller.
 */
#ifndef CTR_BLOCK_POWER_HPP
#define CTR_BLOCK_POWER_HPP

#include <utility>
#include <vector>

#include "ctr/constrained.hpp"
#include "ctr/ct_region.hpp"

namespace ctr {

/// A traced block-power boundary: for each ratio in c_grid, the traced
/// point d(c) on the ray d1/d2 = c and the optimizing phase-power split
/// of the solo user. The traced region contains the per-symbol region
/// pointwise.
struct BlockPowerTrace {
  std::vector<double> c_grid;
  std::vector<TimePair> points;
  std::vector<PowerSplit> splits;
};

/// Step 1 rays for one subregion of the GMAC block-power region:
/// (diagonal ray origin d_C, axis ray origin). Subregion 2 pairs d_C
/// with the horizontal-ray origin d_A (user 1 transmits only after
/// user 2 finishes); subregion 1 mirrors it with d_B.
std::pair<TimePair, TimePair> gmac_block_rays(const GmacParams& params,
                                              const Load& load, int subregion);

/// Step 2 inner optimization at a fixed ratio c: maximizes, over phase
/// power splits meeting the solo user's budget, the intersection of the
/// ray R2/R1 = (tau2/tau1) c with the c-constrained region boundary.
/// Returns the optimizing split and the intersection R*(c). The search
/// is golden-section after a 64-point unimodality pre-scan, falling
/// back to a dense scan with local refinement if the pre-scan sees a
/// non-unimodal profile.
std::pair<PowerSplit, RatePair> gmac_optimal_split(const GmacParams& params,
                                                   const Load& load, double c);

/// Intersection of the ray R2/R1 = (tau2/tau1) c with the c-constrained
/// region boundary for a FIXED solo-user split (the inner evaluation of
/// step 2). A uniform split reproduces the per-symbol boundary.
RatePair gmac_block_ray_rate(const GmacParams& params, const Load& load, double c,
                             const PowerSplit& split);

/// Same fixed-split evaluation for the GBC, with the split meeting the
/// broadcast budget.
RatePair gbc_block_ray_rate(const GbcParams& params, const Load& load, double c,
                            const PowerSplit& split);

/// Full traced boundary: n_grid ratios per subregion, swept over
/// [c_B, 1] and [1, c_A] and unioned in ascending c.
BlockPowerTrace gmac_block_boundary(const GmacParams& params, const Load& load,
                                    std::size_t n_grid);

/// Same two-step procedure for the GBC, with phase powers satisfying
/// the broadcast budget c P_a + (1 - c) P_b = P and the GBC
/// constrained-membership test.
BlockPowerTrace gbc_block_boundary(const GbcParams& params, const Load& load,
                                   std::size_t n_grid);

}  // namespace ctr

#endif  // CTR_BLOCK_POWER_HPP

/**
 * Independent brute-force verification: the definitional completion-time
 * membership test, exhaustive grid comparison of predicates, convexity
 * probes, and the relay-assisted counterexample arithmetic.
 *
 * The definitional test is deliberately independent of every closed form
 * in the library: it only rescales a time pair into constrained rates
 * and delegates to a c-constrained membership predicate.
 *
 * Grid cells and sample pairs are embarrassingly parallel; supplied
 * predicates must be pure.
 */
#ifndef CTR_ORACLE_HPP
#define CTR_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ctr/constrained.hpp"
#include "ctr/ct_map.hpp"

namespace ctr {

using TimePredicate = std::function<bool(const TimePair&)>;
using ConstrainedPredicate = std::function<bool(const ConstrainedRatePoint&)>;

/// Definitional membership: d is in the completion-time region iff the
/// constrained rates R = (tau1/d1, tau2/d2) at ratio c = d1/d2 are in
/// the c-constrained capacity region. Throws for zero or infinite
/// coordinates.
bool membership_oracle(const ConstrainedPredicate& constrained_member,
                       const Load& load, const TimePair& d);

struct GridDisagreement {
  TimePair d;
  bool closed_form;
  bool oracle;
  /// Distance from d to the closed-form predicate's boundary, measured
  /// by bisection along the diagonal direction (regions are closed
  /// under componentwise increase, so the diagonal crosses the boundary
  /// exactly once).
  double boundary_distance;
};

struct GridReport {
  std::size_t nx = 0, ny = 0;
  std::size_t agreements = 0;
  std::vector<GridDisagreement> disagreements;

  std::size_t cells() const noexcept { return agreements + disagreements.size(); }
  /// Largest boundary distance among disagreements (0 when none).
  double worst_distance() const noexcept;
};

/// Exhaustive agreement check of two membership predicates over an
/// nx-by-ny grid spanning the closed box [lo, hi].
GridReport compare_on_grid(const TimePredicate& closed_form, const TimePredicate& oracle,
                           const TimePair& lo, const TimePair& hi, std::size_t nx,
                           std::size_t ny);

/// How the two sampled members relate to the diagonal d1 = d2.
enum class SubregionPairing {
  Straddle,    // one member on each side: probes union non-convexity
  BothFirst,   // both with d1 <= d2: probes convexity of one subregion
  BothSecond,  // both with d1 >= d2
};

struct ConvexityWitness {
  TimePair a;
  TimePair b;
  TimePair midpoint;
};

/// Samples member pairs inside [lo, hi] with the requested pairing and
/// reports every pair whose midpoint is not a member. Sampling is
/// seeded and reproducible; a convex input yields an empty list.
std::vector<ConvexityWitness> convexity_probe(const TimePredicate& member,
                                              const TimePair& lo, const TimePair& hi,
                                              std::size_t samples, std::uint64_t seed,
                                              SubregionPairing pairing);

/// Desk-check of the relay-assisted interference example: with source
/// power p and relay power p_r, the surplus of mutual information
/// available for interference decoding over the two-phase budget, and
/// the gap between the two-phase sum-rate requirement and the channel's
/// sum-capacity upper bound gamma(2p + p_r + 2 p p_r). Both positive
/// certifies a completion-time pair achievable with the relay scheme
/// yet unattainable by any independent two-phase operation.
struct RelayExampleReport {
  double achievable_mi_surplus;
  double sum_bound_gap;
  bool two_phase_impossible;
};

RelayExampleReport relay_example_check(double p, double p_r, double tau = 1.0);

}  // namespace ctr

#endif  // CTR_ORACLE_HPP

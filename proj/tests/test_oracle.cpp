#include <doctest.h>

#include <cmath>

#include "ctr/ct_region.hpp"
#include "ctr/oracle.hpp"

using namespace ctr;

namespace {

const GmacParams kUnit(1.0, 1.0);
const Load kUnitLoad(1.0, 1.0);

ConstrainedPredicate unit_constrained() {
  return [](const ConstrainedRatePoint& pt) {
    static const PiecewiseLinearRegion region = gmac_capacity_region(kUnit);
    return mac_constrained_member(region, 0.5, 0.5, pt);
  };
}

}  // namespace

TEST_CASE("definitional membership at frozen points") {
  CHECK(membership_oracle(unit_constrained(), kUnitLoad,
                          TimePair(2.830074998557688, 2.0)));
  // (1.9, 1.9) needs rates (0.5263, 0.5263): sum exceeds gamma(2)
  CHECK_FALSE(membership_oracle(unit_constrained(), kUnitLoad, TimePair(1.9, 1.9)));
  // on the diagonal the test reduces to standard membership
  CHECK(membership_oracle(unit_constrained(), kUnitLoad,
                          TimePair(2.5237190142858297, 2.5237190142858297)));
  CHECK_THROWS_AS(membership_oracle(unit_constrained(), kUnitLoad, TimePair::never()),
                  std::domain_error);
}

TEST_CASE("grid comparison: identical predicates agree everywhere") {
  const auto yes = [](const TimePair&) { return true; };
  const GridReport r =
      compare_on_grid(yes, yes, TimePair(1.0, 1.0), TimePair(5.0, 5.0), 20, 20);
  CHECK(r.agreements == 400);
  CHECK(r.disagreements.empty());
  CHECK(r.cells() == 400);
}

TEST_CASE("grid comparison flags a perturbed facet") {
  const auto closed = [](const TimePair& d) {
    return gmac_region_member(kUnit, kUnitLoad, d);
  };
  // shift the facet constants by 0.05: a visible sliver disagrees
  const auto perturbed = [](const TimePair& d) {
    const double eps = 1e-12;
    const double g1 = 0.5, gs = 0.7924812503605781, total = 2.0 + 0.05;
    const bool in1 = d.d2 >= d.d1 - eps && d.d1 >= 2.0 - eps && d.d2 >= 2.0 - eps &&
                     (gs - g1) * d.d1 + g1 * d.d2 >= total - eps;
    const bool in2 = d.d1 >= d.d2 - eps && d.d1 >= 2.0 - eps && d.d2 >= 2.0 - eps &&
                     g1 * d.d1 + (gs - g1) * d.d2 >= total - eps;
    return in1 || in2;
  };
  const GridReport r = compare_on_grid(closed, perturbed, TimePair(1.0, 1.0),
                                       TimePair(8.0, 8.0), 100, 100);
  CHECK(!r.disagreements.empty());
  CHECK(r.worst_distance() > 1e-7);  // a genuine gap, not boundary noise
}

TEST_CASE("grid comparison: closed form vs oracle stays within boundary noise") {
  const auto closed = [](const TimePair& d) {
    return gmac_region_member(kUnit, kUnitLoad, d);
  };
  const auto oracle = [](const TimePair& d) {
    return membership_oracle(unit_constrained(), kUnitLoad, d);
  };
  const GridReport r = compare_on_grid(closed, oracle, TimePair(1.0, 1.0),
                                       TimePair(12.0, 12.0), 100, 100);
  for (const auto& dis : r.disagreements) CHECK(dis.boundary_distance <= 1e-7);
}

TEST_CASE("convexity probe finds the case-II reflex midpoint") {
  const auto member = [](const TimePair& d) {
    return gmac_region_member(kUnit, kUnitLoad, d);
  };
  const auto witnesses = convexity_probe(member, TimePair(2.0, 2.0), TimePair(3.0, 3.0),
                                         400, 2024, SubregionPairing::Straddle);
  CHECK(!witnesses.empty());
  for (const auto& w : witnesses) {
    CHECK(member(w.a));
    CHECK(member(w.b));
    CHECK_FALSE(member(w.midpoint));
  }
  // the canonical witness: midpoint of d_D and d_E violates the facet
  const MacCorners c = gmac_region_corners(kUnit, kUnitLoad);
  const TimePair mid(0.5 * (c.d_d.d1 + c.d_e.d1), 0.5 * (c.d_d.d2 + c.d_e.d2));
  CHECK_FALSE(member(mid));
  const double facet = 0.5 * mid.d1 + (0.7924812503605781 - 0.5) * mid.d2;
  CHECK(facet == doctest::Approx(1.9138719370961819).epsilon(1e-12));
  CHECK(facet < 2.0);
}

TEST_CASE("no witnesses within a single convex subregion") {
  const auto member = [](const TimePair& d) {
    return gmac_region_member(kUnit, Load(1.0, 0.5), d);
  };
  for (const auto pairing : {SubregionPairing::BothFirst, SubregionPairing::BothSecond}) {
    const auto witnesses = convexity_probe(member, TimePair(1.5, 0.8),
                                           TimePair(6.0, 6.0), 1000, 7, pairing);
    CHECK(witnesses.empty());
  }
}

TEST_CASE("probe witnesses are reproducible for a fixed seed") {
  const auto member = [](const TimePair& d) {
    return gmac_region_member(kUnit, kUnitLoad, d);
  };
  const auto a = convexity_probe(member, TimePair(2.0, 2.0), TimePair(3.0, 3.0), 100,
                                 99, SubregionPairing::Straddle);
  const auto b = convexity_probe(member, TimePair(2.0, 2.0), TimePair(3.0, 3.0), 100,
                                 99, SubregionPairing::Straddle);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a.d1 == b[i].a.d1);
    CHECK(a[i].b.d2 == b[i].b.d2);
  }
}

TEST_CASE("relay counterexample arithmetic") {
  const RelayExampleReport r = relay_example_check(1.0, 0.25);
  CHECK(r.achievable_mi_surplus == doctest::Approx(0.2288186904958809).epsilon(1e-12));
  CHECK(r.sum_bound_gap == doctest::Approx(0.0465547021957408).epsilon(1e-12));
  CHECK(r.two_phase_impossible);
  // a strong relay closes the gap: no counterexample
  const RelayExampleReport strong = relay_example_check(1.0, 10.0);
  CHECK(strong.sum_bound_gap < 0.0);
  CHECK_FALSE(strong.two_phase_impossible);
  // tau scales the surplus linearly
  const RelayExampleReport scaled = relay_example_check(1.0, 0.25, 3.0);
  CHECK(scaled.achievable_mi_surplus ==
        doctest::Approx(3.0 * r.achievable_mi_surplus).epsilon(1e-12));
  CHECK(scaled.sum_bound_gap == doctest::Approx(r.sum_bound_gap).epsilon(1e-12));
}

TEST_CASE("relay surplus is monotone in the relay power") {
  double prev = -1e9;
  for (int k = 1; k <= 40; ++k) {
    const RelayExampleReport r = relay_example_check(1.0, 0.05 * k);
    CHECK(r.achievable_mi_surplus > prev);
    prev = r.achievable_mi_surplus;
  }
}

#include <doctest.h>

#include <cmath>

#include "ctr/block_power.hpp"

using namespace ctr;

namespace {
const GmacParams kFig9(5.0, 10.0);
const Load kFig9Load(3.0, 2.0);

PowerSplit uniform_split(const GmacParams& params, double c) {
  const double budget = c >= 1.0 ? params.p1 : params.p2;
  return PowerSplit(budget, budget, std::min(c, 1.0 / c));
}
}  // namespace

TEST_CASE("step-1 rays") {
  const auto [d_c2, d_a] = gmac_block_rays(kFig9, kFig9Load, 2);
  CHECK(d_a.d2 == doctest::Approx(1.1562593052715515).epsilon(1e-12));
  CHECK(d_a.d1 == doctest::Approx(3.4773761486788013).epsilon(1e-12));
  CHECK(d_a.d1 / d_a.d2 == doctest::Approx(3.007436249658659).epsilon(1e-12));
  const auto [d_c1, d_b] = gmac_block_rays(kFig9, kFig9Load, 1);
  CHECK(d_b.d1 == doctest::Approx(3.0 / ctr::gamma(5.0)).epsilon(1e-12));
  CHECK(d_b.d2 == doctest::Approx(d_b.d1 + 2.0 / ctr::gamma(10.0)).epsilon(1e-12));
  // both subregions share the diagonal origin, which is the per-symbol
  // diagonal boundary point
  CHECK(d_c1.d1 == doctest::Approx(d_c2.d1).epsilon(1e-12));
  CHECK(d_c1.d1 == doctest::Approx(d_c1.d2).epsilon(1e-12));
  const TimePair per_symbol = gmac_ray_boundary_point(kFig9, kFig9Load, 1.0);
  CHECK(d_c1.d1 == doctest::Approx(per_symbol.d1).epsilon(1e-10));
}

TEST_CASE("c = 1 split is forced and matches the per-symbol point") {
  const auto [split, rate] = gmac_optimal_split(kFig9, kFig9Load, 1.0);
  CHECK(split.p_first == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(rate.r1 == doctest::Approx(1.2).epsilon(1e-9));  // tau1 / 2.5
  CHECK(rate.r2 == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("optimal split dominates the uniform split") {
  for (const double c : {1.5, 2.0, 2.5}) {
    const auto [split, rate] = gmac_optimal_split(kFig9, kFig9Load, c);
    const RatePair uniform = gmac_block_ray_rate(kFig9, kFig9Load, c, uniform_split(kFig9, c));
    CHECK(rate.r1 >= uniform.r1 - 1e-12);
    CHECK(rate.r2 >= uniform.r2 - 1e-12);
    // for these parameters the improvement is strict
    CHECK(rate.r1 > uniform.r1 + 1e-6);
    // budget identity of the returned split
    CHECK(split.satisfies_budget(5.0, 1e-9));
  }
  for (const double c : {0.5, 0.8}) {
    const auto [split, rate] = gmac_optimal_split(kFig9, kFig9Load, c);
    const RatePair uniform = gmac_block_ray_rate(kFig9, kFig9Load, c, uniform_split(kFig9, c));
    CHECK(rate.r1 >= uniform.r1 - 1e-12);
    CHECK(split.satisfies_budget(10.0, 1e-9));
  }
}

TEST_CASE("perturbing the optimal split never improves the intersection") {
  for (const double c : {1.3, 2.0, 2.8}) {
    const auto [split, rate] = gmac_optimal_split(kFig9, kFig9Load, c);
    const double budget = 5.0;
    const double delta = 1e-4 * budget;
    for (const double sign : {-1.0, 1.0}) {
      const double x = split.p_first + sign * delta;
      if (x < 0.0 || x > c * budget) continue;
      const double solo = (c * budget - x) / (c - 1.0);
      const RatePair moved =
          gmac_block_ray_rate(kFig9, kFig9Load, c, PowerSplit(x, solo, 1.0 / c));
      CHECK(moved.r1 <= rate.r1 * (1.0 + 1e-9));
      CHECK(moved.r2 <= rate.r2 * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("uniform-split trace reproduces the per-symbol boundary") {
  const auto [d_c, d_a] = gmac_block_rays(kFig9, kFig9Load, 2);
  (void)d_c;
  const double c_a = d_a.d1 / d_a.d2;
  for (int i = 0; i < 64; ++i) {
    const double c = 1.0 + (c_a - 1.0) * i / 63.0;
    const RatePair rate = gmac_block_ray_rate(kFig9, kFig9Load, c, uniform_split(kFig9, c));
    const TimePair traced(kFig9Load.tau1 / rate.r1, kFig9Load.tau2 / rate.r2);
    const TimePair per_symbol = gmac_ray_boundary_point(kFig9, kFig9Load, c);
    CHECK(traced.d1 == doctest::Approx(per_symbol.d1).epsilon(1e-6));
    CHECK(traced.d2 == doctest::Approx(per_symbol.d2).epsilon(1e-6));
  }
}

TEST_CASE("traced boundary: containment, monotonicity, endpoints") {
  const BlockPowerTrace trace = gmac_block_boundary(kFig9, kFig9Load, 48);
  REQUIRE(trace.c_grid.size() == trace.points.size());
  REQUIRE(trace.c_grid.size() == trace.splits.size());
  for (std::size_t i = 0; i < trace.c_grid.size(); ++i) {
    const double c = trace.c_grid[i];
    const TimePair& d = trace.points[i];
    CHECK(d.d1 / d.d2 == doctest::Approx(c).epsilon(1e-9));
    // block-power region contains the per-symbol region pointwise
    const TimePair per_symbol = gmac_ray_boundary_point(kFig9, kFig9Load, c);
    CHECK(d.d1 <= per_symbol.d1 + 1e-9);
    CHECK(d.d2 <= per_symbol.d2 + 1e-9);
  }
  for (std::size_t i = 1; i < trace.c_grid.size(); ++i) {
    CHECK(trace.c_grid[i] > trace.c_grid[i - 1]);
    CHECK(trace.points[i].d1 >= trace.points[i - 1].d1 - 1e-9);
    CHECK(trace.points[i].d2 <= trace.points[i - 1].d2 + 1e-9);
  }
  // the c = 1 point is the per-symbol diagonal origin
  const TimePair d_c = gmac_ray_boundary_point(kFig9, kFig9Load, 1.0);
  double best = 1e9;
  for (std::size_t i = 0; i < trace.c_grid.size(); ++i)
    if (std::abs(trace.c_grid[i] - 1.0) < 1e-12)
      best = std::min(best, std::abs(trace.points[i].d1 - d_c.d1));
  CHECK(best <= 1e-8);
  // the last traced point approaches the horizontal ray level
  const auto [diag, d_a] = gmac_block_rays(kFig9, kFig9Load, 2);
  (void)diag;
  CHECK(trace.points.back().d2 <= d_a.d2 + 1e-6);
}

TEST_CASE("gbc block boundary basics") {
  const GbcParams params(4.0, 1.0, 9.0);
  const Load load(10.0, 10.0);
  const BlockPowerTrace trace = gbc_block_boundary(params, load, 24);
  // containment against the per-symbol boundary, pointwise on each ray
  for (std::size_t i = 0; i < trace.c_grid.size(); ++i) {
    const TimePair per_symbol = gbc_ray_boundary_point(params, load, trace.c_grid[i]);
    CHECK(trace.points[i].d1 <= per_symbol.d1 + 1e-6);
    CHECK(trace.points[i].d2 <= per_symbol.d2 + 1e-6);
  }
  // uniform split reproduces the per-symbol boundary
  for (const double c : {0.7, 1.0, 1.6, 2.2}) {
    const RatePair rate = gbc_block_ray_rate(params, load, c,
                                             PowerSplit(9.0, 9.0, std::min(c, 1.0 / c)));
    const TimePair traced(load.tau1 / rate.r1, load.tau2 / rate.r2);
    const TimePair per_symbol = gbc_ray_boundary_point(params, load, c);
    CHECK(traced.d1 == doctest::Approx(per_symbol.d1).epsilon(1e-6));
    CHECK(traced.d2 == doctest::Approx(per_symbol.d2).epsilon(1e-6));
  }
  // c = 1 endpoint equals the per-symbol diagonal point
  const TimePair d_c = gbc_ray_boundary_point(params, load, 1.0);
  double best = 1e9;
  for (std::size_t i = 0; i < trace.c_grid.size(); ++i)
    if (std::abs(trace.c_grid[i] - 1.0) < 1e-12)
      best = std::min(best, std::abs(trace.points[i].d1 - d_c.d1));
  CHECK(best <= 1e-6);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(gmac_block_rays(kFig9, kFig9Load, 3), std::invalid_argument);
  CHECK_THROWS_AS(gmac_block_boundary(kFig9, kFig9Load, 1), std::invalid_argument);
  CHECK_THROWS_AS(gmac_optimal_split(kFig9, kFig9Load, 0.0), std::domain_error);
  CHECK_THROWS_AS(
      gmac_block_ray_rate(kFig9, kFig9Load, 2.0, PowerSplit(5.0, 5.0, 0.4)),
      std::invalid_argument);
}

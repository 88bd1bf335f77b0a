#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ctr/channel.hpp"

using namespace ctr;

namespace {
constexpr double kGammaHalf = 0.2924812503605781;  // ctr::gamma(0.5)
constexpr double kGammaTwo = 0.7924812503605781;   // ctr::gamma(2)
}  // namespace

TEST_CASE("gamma basics") {
  CHECK(ctr::gamma(0.0) == 0.0);
  CHECK(ctr::gamma(1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ctr::gamma(3.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ctr::gamma(0.5) == doctest::Approx(kGammaHalf).epsilon(1e-14));
  CHECK_THROWS_AS(ctr::gamma(-1e-9), std::domain_error);
  CHECK_THROWS_AS(ctr::gamma(std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK(inverse_gamma(ctr::gamma(7.25)) == doctest::Approx(7.25).epsilon(1e-12));
}

TEST_CASE("gamma is strictly increasing and concave") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    double x = u(rng), y = u(rng);
    if (x > y) std::swap(x, y);
    if (y - x < 1e-9) continue;
    CHECK(ctr::gamma(x) < ctr::gamma(y));
    CHECK(ctr::gamma(0.5 * (x + y)) >= 0.5 * (ctr::gamma(x) + ctr::gamma(y)) - 1e-12);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(GmacParams(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(GmacParams(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(Load(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(RatePair(-0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(GicParams(1.0, 1.0, -0.5, 0.0), std::domain_error);
  const GbcParams swapped(1.0, 4.0, 9.0);
  CHECK(swapped.swapped);
  CHECK(swapped.h1 == 4.0);
  CHECK(swapped.h2 == 1.0);
}

TEST_CASE("gmac capacity f selects the right piece") {
  const GmacParams params(1.0, 1.0);
  CHECK(gmac_capacity_f(params, RatePair(0.0, 0.0)) ==
        doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(gmac_capacity_f(params, RatePair(kGammaHalf, 0.5)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gmac_capacity_f(params, RatePair(0.6, 0.6)) ==
        doctest::Approx(1.2 - kGammaTwo).epsilon(1e-12));
}

TEST_CASE("gmac capacity f sign agrees with the three inequalities") {
  for (const auto& [p1, p2] :
       {std::pair{1.0, 1.0}, std::pair{5.0, 10.0}, std::pair{10.0, 1.0}}) {
    const GmacParams params(p1, p2);
    const double g1 = ctr::gamma(p1), g2 = ctr::gamma(p2), gs = ctr::gamma(p1 + p2);
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const RatePair r((g1 + 0.5) * i / 99.0, (g2 + 0.5) * j / 99.0);
        const bool direct = r.r1 <= g1 && r.r2 <= g2 && r.r1 + r.r2 <= gs;
        const double f = gmac_capacity_f(params, r);
        if (std::abs(f) > 1e-9) CHECK(direct == (f < 0.0));
      }
    }
  }
}

TEST_CASE("gmac pentagon vertices") {
  const auto region = gmac_capacity_region(GmacParams(1.0, 1.0));
  REQUIRE(region.vertices().size() == 4);
  const auto& v = region.vertices();
  CHECK(v[0].r1 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(v[0].r2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[1].r1 == doctest::Approx(kGammaHalf).epsilon(1e-12));
  CHECK(v[1].r2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[2].r1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[2].r2 == doctest::Approx(kGammaHalf).epsilon(1e-12));
  CHECK(v[3].r1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[3].r2 == doctest::Approx(0.0).epsilon(1e-14));

  const auto wide = gmac_capacity_region(GmacParams(5.0, 10.0));
  CHECK(wide.cap1() == doctest::Approx(ctr::gamma(5.0)).epsilon(1e-14));
  CHECK(wide.cap2() == doctest::Approx(ctr::gamma(10.0)).epsilon(1e-14));
  CHECK(wide.vertices()[1].r1 + wide.vertices()[1].r2 ==
        doctest::Approx(ctr::gamma(15.0)).epsilon(1e-12));
}

TEST_CASE("swapping powers reflects the pentagon") {
  const auto a = gmac_capacity_region(GmacParams(2.0, 7.0));
  const auto b = gmac_capacity_region(GmacParams(7.0, 2.0));
  REQUIRE(a.vertices().size() == b.vertices().size());
  const std::size_t n = a.vertices().size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(a.vertices()[i].r1 ==
          doctest::Approx(b.vertices()[n - 1 - i].r2).epsilon(1e-12));
    CHECK(a.vertices()[i].r2 ==
          doctest::Approx(b.vertices()[n - 1 - i].r1).epsilon(1e-12));
  }
}

TEST_CASE("region boundary is non-increasing and vertices consistent") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 20.0);
  for (int t = 0; t < 50; ++t) {
    const auto region = gmac_capacity_region(GmacParams(u(rng), u(rng)));
    const auto& v = region.vertices();
    for (std::size_t i = 1; i < v.size(); ++i) {
      CHECK(v[i].r1 >= v[i - 1].r1 - 1e-12);
      CHECK(v[i].r2 <= v[i - 1].r2 + 1e-12);
    }
    for (const auto& vert : v) CHECK(std::abs(region.support_residual(vert)) <= 1e-12);
  }
}

TEST_CASE("ray intersection walks the boundary") {
  const auto region = gmac_capacity_region(GmacParams(1.0, 1.0));
  const RatePair diag = region.ray_intersection(1.0);
  CHECK(diag.r1 == doctest::Approx(kGammaTwo / 2.0).epsilon(1e-12));
  CHECK(diag.r2 == doctest::Approx(diag.r1).epsilon(1e-12));
  // a steep ray exits through the top cap
  const RatePair steep = region.ray_intersection(10.0);
  CHECK(steep.r2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(steep.r1 == doctest::Approx(0.05).epsilon(1e-12));
  // through the corner exactly
  const RatePair corner = region.ray_intersection(0.5 / kGammaHalf);
  CHECK(corner.r1 == doctest::Approx(kGammaHalf).epsilon(1e-10));
  CHECK(corner.r2 == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("gbc boundary point endpoints and fig-6 split") {
  const GbcParams params(4.0, 1.0, 9.0);
  const RatePair r_a = gbc_boundary_point(params, 0.0);
  CHECK(r_a.r1 == 0.0);
  CHECK(r_a.r2 == doctest::Approx(1.6609640474436813).epsilon(1e-12));
  const RatePair r_b = gbc_boundary_point(params, 9.0);
  CHECK(r_b.r1 == doctest::Approx(2.6047266828144745).epsilon(1e-12));
  CHECK(r_b.r2 == doctest::Approx(0.0).epsilon(1e-12));
  const RatePair r_c = gbc_boundary_point(params, 1.0);
  CHECK(r_c.r1 == doctest::Approx(1.160964047443681).epsilon(1e-12));
  CHECK(r_c.r2 == doctest::Approx(1.160964047443681).epsilon(1e-12));
  CHECK_THROWS_AS(gbc_boundary_point(params, 9.5), std::domain_error);
  CHECK_THROWS_AS(gbc_boundary_point(params, -0.1), std::domain_error);
}

TEST_CASE("gbc capacity f on and off the boundary") {
  const GbcParams params(4.0, 1.0, 9.0);
  CHECK(gbc_capacity_f(params, RatePair(0.0, ctr::gamma(9.0))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gbc_capacity_f(params, RatePair(1.160964047443681, 1.160964047443681)) ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(gbc_capacity_f(params, RatePair(1.160964047443681, 1.5)) ==
        doctest::Approx(0.3390359525563187).epsilon(1e-9));
}

TEST_CASE("gbc boundary points satisfy f = 0") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ug(0.1, 8.0), up(0.5, 30.0);
  for (int t = 0; t < 30; ++t) {
    const GbcParams params(ug(rng), ug(rng), up(rng));
    for (int k = 0; k <= 16; ++k) {
      const double split = params.p * k / 16.0;
      CHECK(std::abs(gbc_capacity_f(params, gbc_boundary_point(params, split))) <=
            1e-9);
    }
  }
}

TEST_CASE("swapped gbc construction mirrors results") {
  const GbcParams direct(4.0, 1.0, 9.0);
  const GbcParams mirrored(1.0, 4.0, 9.0);  // caller's user 1 is the weak one
  const RatePair r_direct = gbc_boundary_point(direct, 2.0);
  const RatePair r_mirrored = gbc_boundary_point(mirrored, 2.0);
  CHECK(r_mirrored.r1 == doctest::Approx(r_direct.r2).epsilon(1e-14));
  CHECK(r_mirrored.r2 == doctest::Approx(r_direct.r1).epsilon(1e-14));
  CHECK(gbc_capacity_f(mirrored, RatePair(0.3, 1.1)) ==
        doctest::Approx(gbc_capacity_f(direct, RatePair(1.1, 0.3))).epsilon(1e-14));
}

TEST_CASE("gic regime classification") {
  CHECK(gic_regime(GicParams(10.0, 15.0, 0.64, 0.36)) == Regime::Weak);
  CHECK(gic_regime(GicParams(1.0, 1.0, 2.0, 2.0)) == Regime::VeryStrong);
  CHECK(gic_regime(GicParams(1.0, 1.0, 1.5, 1.5)) == Regime::Strong);
  CHECK(gic_regime(GicParams(1.0, 1.0, 2.0, 0.5)) == Regime::Mixed);
  CHECK(gic_regime(GicParams(1.0, 1.0, 0.5, 1.2)) == Regime::Mixed);
  // one link very strong with the other merely strong tiles nothing
  CHECK_THROWS_AS(gic_regime(GicParams(1.0, 1.0, 2.5, 1.5)), UnsupportedRegime);
  CHECK_THROWS_AS(gic_regime(GicParams(1.0, 1.0, 1.5, 2.5)), UnsupportedRegime);
  // boundary equalities exactly as written
  CHECK(gic_regime(GicParams(1.0, 1.0, 1.0, 1.0)) == Regime::Strong);
}

TEST_CASE("gic strong capacity region") {
  const auto rect = gic_strong_capacity_region(GicParams(1.0, 1.0, 2.0, 2.0));
  CHECK(rect.cap1() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rect.cap2() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rect.contains(RatePair(0.5, 0.5), 1e-9));

  const auto strong = gic_strong_capacity_region(GicParams(1.0, 1.0, 1.5, 1.5));
  CHECK(strong.contains(RatePair(0.45, 0.45), 1e-9));
  double sum_b = 1e9;
  for (const auto& hp : strong.halfplanes())
    if (hp.a1 == 1.0 && hp.a2 == 1.0) sum_b = hp.b;
  CHECK(sum_b == doctest::Approx(0.9036774610288022).epsilon(1e-12));

  double asym_b = 1e9;
  for (const auto& hp :
       gic_strong_capacity_region(GicParams(1.0, 1.0, 1.2, 1.8)).halfplanes())
    if (hp.a1 == 1.0 && hp.a2 == 1.0) asym_b = hp.b;
  CHECK(asym_b == doctest::Approx(ctr::gamma(2.2)).epsilon(1e-12));

  CHECK_THROWS_AS(gic_strong_capacity_region(GicParams(10.0, 15.0, 0.64, 0.36)),
                  std::domain_error);
}

TEST_CASE("strong region contains the same-power pentagon") {
  // Interference at or above the direct gain only relaxes the sum cap:
  // min(gamma(p1 + b p2), gamma(a p1 + p2)) >= gamma(p1 + p2) for
  // a, b >= 1, so the pentagon sits inside the strong-regime region
  // (and the sum constraint disappears entirely in the very strong one).
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> up(0.2, 10.0), ug(1.0, 1.6);
  for (int t = 0; t < 30; ++t) {
    const double p1 = up(rng), p2 = up(rng);
    const GicParams gic(p1, p2, 1.0 + 0.4 * p2 * (ug(rng) - 1.0),
                        1.0 + 0.4 * p1 * (ug(rng) - 1.0));
    REQUIRE(gic_regime(gic) == Regime::Strong);
    const auto strong = gic_strong_capacity_region(gic);
    const auto pentagon = gmac_capacity_region(GmacParams(p1, p2));
    for (const auto& v : pentagon.vertices()) CHECK(strong.contains(v, 1e-9));
  }
}

TEST_CASE("etkin-tse-wang weak preset") {
  const GicParams params(10.0, 15.0, 0.64, 0.36);
  const GicBounds bounds = etkin_tse_wang_weak_bounds(params);
  CHECK(bounds.outer.cap1() == doctest::Approx(ctr::gamma(10.0)).epsilon(1e-12));
  CHECK(bounds.outer.cap2() == doctest::Approx(2.0).epsilon(1e-12));
  // the deflated 2r1+r2 constraint binds the inner r1 cap here
  CHECK(bounds.inner.cap1() == doctest::Approx(0.6383977894402308).epsilon(1e-12));
  for (const auto& v : bounds.inner.vertices()) CHECK(bounds.outer.contains(v, 1e-9));
  CHECK_THROWS_AS(etkin_tse_wang_weak_bounds(GicParams(1.0, 1.0, 1.5, 1.5)),
                  std::domain_error);
}

TEST_CASE("degenerate and invalid regions are rejected") {
  CHECK_THROWS_AS(PiecewiseLinearRegion({{1.0, 0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinearRegion({{0.0, 0.0, 1.0}, {1.0, 1.0, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinearRegion({{1.0, 1.0, -0.5}}), std::invalid_argument);
}

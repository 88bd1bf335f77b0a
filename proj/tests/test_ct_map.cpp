#include <doctest.h>

#include <cmath>
#include <random>

#include "ctr/ct_map.hpp"

using namespace ctr;

namespace {
const Load kUnitLoad(1.0, 1.0);
constexpr double kGammaHalf = 0.2924812503605781;
constexpr double kGammaTwo = 0.7924812503605781;
}  // namespace

TEST_CASE("map_g reproduces the corner d_D") {
  // GMAC(1,1), load (1,1): G2 of r_D = (gamma(0.5), 0.5).
  const TimePair d = map_g(2, RatePair(kGammaHalf, 0.5), kUnitLoad, 0.5);
  CHECK(d.d1 == doctest::Approx(2.830074998557688).epsilon(1e-12));
  CHECK(d.d2 == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("map_g with the other user at its solo rate") {
  const TimePair d = map_g(1, RatePair(0.4, 0.5), kUnitLoad, 0.5);
  CHECK(d.d2 == doctest::Approx(1.0 / 0.5).epsilon(1e-14));  // tau_j / r_j*
  CHECK(d.d1 == doctest::Approx(1.0 / 0.4).epsilon(1e-14));
}

TEST_CASE("map_g edge cases") {
  CHECK_THROWS_AS(map_g(1, RatePair(0.4, 0.6), kUnitLoad, 0.5), std::domain_error);
  const TimePair never = map_g(1, RatePair(0.0, 0.3), kUnitLoad, 0.5);
  CHECK_FALSE(never.finite());
  CHECK_THROWS_AS(map_g(3, RatePair(0.1, 0.1), kUnitLoad, 0.5), std::invalid_argument);
}

TEST_CASE("G1 equals G2 on the load ray") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 0.45), ut(0.2, 5.0);
  for (int i = 0; i < 200; ++i) {
    const Load load(ut(rng), ut(rng));
    const double r1 = u(rng);
    const double r2 = r1 * load.tau2 / load.tau1;
    if (r2 >= 0.5) continue;
    const TimePair a = map_g(1, RatePair(r1, r2), load, 0.5);
    const TimePair b = map_g(2, RatePair(r1, r2), load, 0.5);
    CHECK(a.d1 == doctest::Approx(b.d1).epsilon(1e-12));
    CHECK(a.d2 == doctest::Approx(b.d2).epsilon(1e-12));
    CHECK(a.d1 == doctest::Approx(a.d2).epsilon(1e-12));
  }
}

TEST_CASE("maps are non-increasing") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 0.49);
  for (int i = 0; i < 500; ++i) {
    double x1 = u(rng), x2 = u(rng), y1 = u(rng), y2 = u(rng);
    const RatePair lo(std::min(x1, x2), std::min(y1, y2));
    const RatePair hi(std::max(x1, x2), std::max(y1, y2));
    for (int which : {1, 2}) {
      const TimePair dl = map_g(which, lo, kUnitLoad, 0.5);
      const TimePair dh = map_g(which, hi, kUnitLoad, 0.5);
      CHECK(dh.d1 <= dl.d1 + 1e-12);
      CHECK(dh.d2 <= dl.d2 + 1e-12);
    }
  }
}

TEST_CASE("inverse_g round-trips map_g") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.02, 0.48), ut(0.2, 4.0), us(0.5, 1.5);
  for (int i = 0; i < 500; ++i) {
    const Load load(ut(rng), ut(rng));
    const double r_star = us(rng);
    for (int which : {1, 2}) {
      const double ri = u(rng);
      const double rj = u(rng) * r_star / 0.5;
      if (rj > r_star) continue;
      const RatePair r = which == 1 ? RatePair(ri, rj) : RatePair(rj, ri);
      const TimePair d = map_g(which, r, load, r_star);
      const bool valid_band = which == 1 ? d.d2 >= d.d1 : d.d1 >= d.d2;
      if (!valid_band) continue;
      const InverseMapResult back = inverse_g(which, d, load, r_star);
      CHECK_FALSE(back.dominated);
      CHECK(back.r.r1 == doctest::Approx(r.r1).epsilon(1e-10));
      CHECK(back.r.r2 == doctest::Approx(r.r2).epsilon(1e-10));
    }
  }
}

TEST_CASE("inverse_g band edges") {
  const Load load(1.0, 1.0);
  // d2 = d1: no deflation, r2 = tau2 / d1
  const InverseMapResult same = inverse_g(1, TimePair(2.5, 2.5), load, 0.5);
  CHECK(same.r.r2 == doctest::Approx(1.0 / 2.5).epsilon(1e-12));
  // upper edge d2 = tau2 / r2* + d1 gives r2 = 0
  const InverseMapResult edge = inverse_g(1, TimePair(2.5, 2.5 + 1.0 / 0.5), load, 0.5);
  CHECK(edge.r.r2 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(edge.dominated);
  // beyond the band: clamped to zero and flagged
  const InverseMapResult beyond = inverse_g(1, TimePair(2.5, 5.5), load, 0.5);
  CHECK(beyond.dominated);
  CHECK(beyond.r.r2 == 0.0);
  // wrong subregion is a precondition error
  CHECK_THROWS_AS(inverse_g(1, TimePair(3.0, 2.0), load, 0.5), std::domain_error);
}

TEST_CASE("vertical line transports to a vertical line") {
  // r1 = 1/a1 fixed: image is d1 = tau1 * a1... i.e. a2' = 0.
  const LineCoeffs out = transport_line(1, LineCoeffs(4.0, 0.0), kUnitLoad, 0.5);
  CHECK(out.a2 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(1.0 / out.a1 == doctest::Approx(4.0).epsilon(1e-12));  // d1 = tau1 * a1
}

TEST_CASE("transported line contains mapped collinear points") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.05, 0.45), ut(0.3, 3.0), us(0.5, 1.2);
  for (int t = 0; t < 200; ++t) {
    const Load load(ut(rng), ut(rng));
    const double r_star = us(rng);
    // Line through two random rate points.
    const RatePair p(u(rng), u(rng) * r_star / 0.5 * 0.9);
    const RatePair q(u(rng), u(rng) * r_star / 0.5 * 0.9);
    const double det = p.r1 * q.r2 - p.r2 * q.r1;
    if (std::abs(det) < 1e-6) continue;
    const double a1 = (q.r2 - p.r2) / det;
    const double a2 = (p.r1 - q.r1) / det;
    if (std::abs(a1 * load.tau1 + a2 * load.tau2) < 1e-9) continue;
    for (int which : {1, 2}) {
      const LineCoeffs img = transport_line(which, LineCoeffs(a1, a2), load, r_star);
      for (int k = 0; k <= 10; ++k) {
        const double t01 = k / 10.0;
        const RatePair m(p.r1 + t01 * (q.r1 - p.r1), p.r2 + t01 * (q.r2 - p.r2));
        const double rj = which == 1 ? m.r2 : m.r1;
        const double ri = which == 1 ? m.r1 : m.r2;
        if (rj > r_star || ri <= 1e-3) continue;
        const TimePair d = map_g(which, m, load, r_star);
        CHECK(img.a1 * d.d1 + img.a2 * d.d2 == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("sum facet transports onto the region facets") {
  // GMAC(1,1), load (tau1,tau2): the sum facet r1 + r2 = gamma(2) maps
  // under G2 onto g1 d1 + (gsum - g1) d2 = tau1 + tau2 and under G1
  // onto (gsum - g2) d1 + g2 d2 = tau1 + tau2.
  const Load load(2.0, 3.0);
  const LineCoeffs facet(1.0 / kGammaTwo, 1.0 / kGammaTwo);
  const LineCoeffs via_g2 = transport_line(2, facet, load, 0.5);
  const double total = load.tau1 + load.tau2;
  CHECK(via_g2.a1 == doctest::Approx(0.5 / total).epsilon(1e-12));
  CHECK(via_g2.a2 == doctest::Approx((kGammaTwo - 0.5) / total).epsilon(1e-12));
  const LineCoeffs via_g1 = transport_line(1, facet, load, 0.5);
  CHECK(via_g1.a1 == doctest::Approx((kGammaTwo - 0.5) / total).epsilon(1e-12));
  CHECK(via_g1.a2 == doctest::Approx(0.5 / total).epsilon(1e-12));
}

TEST_CASE("degenerate transport denominator") {
  CHECK_THROWS_AS(transport_line(1, LineCoeffs(1.0, -1.0), kUnitLoad, 0.5),
                  std::domain_error);
}

#include "ctr/ct_map.hpp"

#include <cmath>
#include <limits>

namespace ctr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_which(int which) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("map index must be 1 or 2");
}

}  // namespace

TimePair::TimePair(double d1_, double d2_) : d1(d1_), d2(d2_) {
  if (std::isnan(d1) || std::isnan(d2) || d1 <= 0.0 || d2 <= 0.0)
    throw std::domain_error("TimePair: completion times must be strictly positive");
}

bool TimePair::finite() const noexcept {
  return std::isfinite(d1) && std::isfinite(d2);
}

TimePair TimePair::never() noexcept {
  TimePair t(1.0, 1.0);
  t.d1 = kInf;
  t.d2 = kInf;
  return t;
}

LineCoeffs::LineCoeffs(double a1_, double a2_) : a1(a1_), a2(a2_) {
  if (!std::isfinite(a1) || !std::isfinite(a2))
    throw std::domain_error("LineCoeffs: coefficients must be finite");
  if (a1 == 0.0 && a2 == 0.0)
    throw std::domain_error("LineCoeffs: coefficients must not both be zero");
}

TimePair map_g(int which, const RatePair& r, const Load& load, double r_star_other) {
  check_which(which);
  if (!(r_star_other > 0.0) || !std::isfinite(r_star_other))
    throw std::domain_error("map_g: solo rate must be positive and finite");
  const double ri = which == 1 ? r.r1 : r.r2;
  const double rj = which == 1 ? r.r2 : r.r1;
  const double ti = which == 1 ? load.tau1 : load.tau2;
  const double tj = which == 1 ? load.tau2 : load.tau1;
  if (rj > r_star_other * (1.0 + 1e-12))
    throw std::domain_error("map_g: other user's rate exceeds its solo rate");
  if (ri == 0.0) return TimePair::never();
  const double di = ti / ri;
  const double dj = tj / r_star_other + (r_star_other - rj) * ti / (r_star_other * ri);
  return which == 1 ? TimePair(di, dj) : TimePair(dj, di);
}

InverseMapResult inverse_g(int which, const TimePair& d, const Load& load,
                           double r_star_other) {
  check_which(which);
  if (!d.finite()) throw std::domain_error("inverse_g: infinite completion time");
  if (!(r_star_other > 0.0) || !std::isfinite(r_star_other))
    throw std::domain_error("inverse_g: solo rate must be positive and finite");
  const double di = which == 1 ? d.d1 : d.d2;
  const double dj = which == 1 ? d.d2 : d.d1;
  const double ti = which == 1 ? load.tau1 : load.tau2;
  const double tj = which == 1 ? load.tau2 : load.tau1;
  if (dj < di * (1.0 - 1e-12))
    throw std::domain_error("inverse_g: point lies in the other subregion");
  const double ri = ti / di;
  const double raw = tj / di - ((dj - di) / di) * r_star_other;
  const bool dominated = raw < 0.0;
  const double rj = dominated ? 0.0 : raw;
  const RatePair r = which == 1 ? RatePair(ri, rj) : RatePair(rj, ri);
  return InverseMapResult{r, dominated};
}

LineCoeffs transport_line(int which, const LineCoeffs& coeffs, const Load& load,
                          double r_star_other) {
  check_which(which);
  if (!(r_star_other > 0.0) || !std::isfinite(r_star_other))
    throw std::domain_error("transport_line: solo rate must be positive and finite");
  const double den = coeffs.a1 * load.tau1 + coeffs.a2 * load.tau2;
  if (std::abs(den) <= 1e-300)
    throw std::domain_error("transport_line: degenerate denominator");
  if (which == 1) {
    const double a1p = (1.0 - coeffs.a2 * r_star_other) / den;
    const double a2p = coeffs.a2 * r_star_other / den;
    return LineCoeffs(a1p, a2p);
  }
  const double a2p = (1.0 - coeffs.a1 * r_star_other) / den;
  const double a1p = coeffs.a1 * r_star_other / den;
  return LineCoeffs(a1p, a2p);
}

}  // namespace ctr

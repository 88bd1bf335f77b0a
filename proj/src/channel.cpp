#include "ctr/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ctr {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(what) + " must be finite");
}

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error("gamma: argument must be finite and non-negative");
  // log1p keeps full precision for small x.
  return 0.5 * std::log1p(x) / std::numbers::ln2;
}

double inverse_gamma(double y) {
  if (!std::isfinite(y) || y < 0.0)
    throw std::domain_error("inverse_gamma: argument must be finite and non-negative");
  return std::expm1(2.0 * y * std::numbers::ln2);
}

GmacParams::GmacParams(double p1_, double p2_) : p1(p1_), p2(p2_) {
  require_finite(p1, "GmacParams.p1");
  require_finite(p2, "GmacParams.p2");
  // Zero power makes completion time infinite; rejected at construction.
  if (p1 <= 0.0 || p2 <= 0.0)
    throw std::domain_error("GmacParams: powers must be strictly positive");
}

GbcParams::GbcParams(double h1_, double h2_, double p_)
    : h1(h1_), h2(h2_), p(p_), swapped(false) {
  require_finite(h1, "GbcParams.h1");
  require_finite(h2, "GbcParams.h2");
  require_finite(p, "GbcParams.p");
  if (h1 <= 0.0 || h2 <= 0.0)
    throw std::domain_error("GbcParams: gains must be strictly positive");
  if (p <= 0.0) throw std::domain_error("GbcParams: power must be strictly positive");
  if (h1 < h2) {
    std::swap(h1, h2);
    swapped = true;
  }
}

GicParams::GicParams(double p1_, double p2_, double a_, double b_)
    : p1(p1_), p2(p2_), a(a_), b(b_) {
  require_finite(p1, "GicParams.p1");
  require_finite(p2, "GicParams.p2");
  require_finite(a, "GicParams.a");
  require_finite(b, "GicParams.b");
  if (p1 <= 0.0 || p2 <= 0.0)
    throw std::domain_error("GicParams: powers must be strictly positive");
  if (a < 0.0 || b < 0.0)
    throw std::domain_error("GicParams: link gains must be non-negative");
}

Load::Load(double tau1_, double tau2_) : tau1(tau1_), tau2(tau2_) {
  require_finite(tau1, "Load.tau1");
  require_finite(tau2, "Load.tau2");
  if (tau1 <= 0.0 || tau2 <= 0.0)
    throw std::domain_error("Load: bit pools must be strictly positive");
}

RatePair::RatePair(double r1_, double r2_) : r1(r1_), r2(r2_) {
  require_finite(r1, "RatePair.r1");
  require_finite(r2, "RatePair.r2");
  if (r1 < 0.0 || r2 < 0.0)
    throw std::domain_error("RatePair: rates must be non-negative");
}

namespace {

// Scale-aware slack used while deriving vertices.
double hp_slack(const HalfPlane& hp) {
  return 1e-12 * std::max({1.0, std::abs(hp.b), std::abs(hp.a1), std::abs(hp.a2)});
}

bool feasible(const std::vector<HalfPlane>& hps, double x, double y) {
  if (x < -1e-12 || y < -1e-12) return false;
  for (const auto& hp : hps)
    if (hp.a1 * x + hp.a2 * y > hp.b + hp_slack(hp)) return false;
  return true;
}

}  // namespace

PiecewiseLinearRegion::PiecewiseLinearRegion(std::vector<HalfPlane> halfplanes)
    : halfplanes_(std::move(halfplanes)) {
  if (halfplanes_.empty())
    throw std::invalid_argument("PiecewiseLinearRegion: no half-planes");
  bool bounds1 = false, bounds2 = false;
  for (const auto& hp : halfplanes_) {
    if (hp.a1 < 0.0 || hp.a2 < 0.0 || (hp.a1 == 0.0 && hp.a2 == 0.0))
      throw std::invalid_argument(
          "PiecewiseLinearRegion: half-plane coefficients must be non-negative "
          "and not both zero");
    if (!std::isfinite(hp.a1) || !std::isfinite(hp.a2) || !std::isfinite(hp.b))
      throw std::invalid_argument("PiecewiseLinearRegion: non-finite half-plane");
    if (hp.b < 0.0)
      throw std::invalid_argument("PiecewiseLinearRegion: empty region (b < 0)");
    if (hp.a1 > 0.0) bounds1 = true;
    if (hp.a2 > 0.0) bounds2 = true;
  }
  if (!bounds1 || !bounds2)
    throw std::invalid_argument("PiecewiseLinearRegion: region is unbounded");

  // Candidate vertices: axis intercepts of every half-plane and all
  // pairwise half-plane intersections, filtered by feasibility.
  std::vector<std::pair<double, double>> cand;
  for (const auto& hp : halfplanes_) {
    if (hp.a2 > 0.0) cand.emplace_back(0.0, hp.b / hp.a2);
    if (hp.a1 > 0.0) cand.emplace_back(hp.b / hp.a1, 0.0);
  }
  for (std::size_t i = 0; i < halfplanes_.size(); ++i) {
    for (std::size_t j = i + 1; j < halfplanes_.size(); ++j) {
      const auto& u = halfplanes_[i];
      const auto& v = halfplanes_[j];
      const double det = u.a1 * v.a2 - u.a2 * v.a1;
      const double scale = std::max({std::abs(u.a1), std::abs(u.a2),
                                     std::abs(v.a1), std::abs(v.a2)});
      if (std::abs(det) <= 1e-14 * scale * scale) continue;  // parallel
      const double x = (u.b * v.a2 - v.b * u.a2) / det;
      const double y = (u.a1 * v.b - v.a1 * u.b) / det;
      cand.emplace_back(x, y);
    }
  }

  std::vector<std::pair<double, double>> feas;
  double scale = 0.0;
  for (auto& c : cand) {
    if (feasible(halfplanes_, c.first, c.second)) {
      c.first = std::max(c.first, 0.0);
      c.second = std::max(c.second, 0.0);
      feas.push_back(c);
      scale = std::max({scale, c.first, c.second});
    }
  }
  if (feas.empty())
    throw std::invalid_argument("PiecewiseLinearRegion: empty region");
  const double tol = 1e-12 * std::max(1.0, scale);

  // Boundary vertices are the weakly Pareto-maximal feasible candidates:
  // a point with another feasible candidate strictly above in BOTH
  // coordinates is interior to the upper-right boundary chain. Axis
  // endpoints (0, cap2) and (cap1, 0) stay on the chain.
  std::vector<std::pair<double, double>> pareto;
  for (const auto& c : feas) {
    bool dominated = false;
    for (const auto& o : feas)
      if (o.first > c.first + tol && o.second > c.second + tol) {
        dominated = true;
        break;
      }
    if (!dominated) pareto.push_back(c);
  }
  std::sort(pareto.begin(), pareto.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second > r.second;
  });
  // Dedupe, then drop points collinear with their neighbours (redundant
  // constraints running through a facet interior).
  std::vector<std::pair<double, double>> uniq;
  for (const auto& c : pareto) {
    if (!uniq.empty() && std::abs(c.first - uniq.back().first) <= tol &&
        std::abs(c.second - uniq.back().second) <= tol)
      continue;
    uniq.push_back(c);
  }
  std::vector<std::pair<double, double>> kept;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    if (i > 0 && i + 1 < uniq.size()) {
      const auto& a = uniq[i - 1];
      const auto& b = uniq[i];
      const auto& c = uniq[i + 1];
      const double cross = (b.first - a.first) * (c.second - a.second) -
                           (b.second - a.second) * (c.first - a.first);
      if (std::abs(cross) <= tol * std::max(1.0, scale)) continue;
    }
    kept.push_back(uniq[i]);
  }

  vertices_.reserve(kept.size());
  for (const auto& c : kept) vertices_.emplace_back(c.first, c.second);

  // Boundary must be non-increasing: moving right never increases r2.
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].r1 < vertices_[i - 1].r1 - tol ||
        vertices_[i].r2 > vertices_[i - 1].r2 + tol)
      throw std::logic_error("PiecewiseLinearRegion: boundary is not monotone");
  }
  for (const auto& v : vertices_) {
    if (support_residual(v) > 1e-12 * std::max(1.0, scale))
      throw std::logic_error("PiecewiseLinearRegion: vertex violates a half-plane");
  }
}

double PiecewiseLinearRegion::support_residual(const RatePair& r) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& hp : halfplanes_)
    worst = std::max(worst, hp.a1 * r.r1 + hp.a2 * r.r2 - hp.b);
  return worst;
}

bool PiecewiseLinearRegion::contains(const RatePair& r, double slack) const {
  return support_residual(r) <= slack;
}

double PiecewiseLinearRegion::cap1() const noexcept { return vertices_.back().r1; }

double PiecewiseLinearRegion::cap2() const noexcept { return vertices_.front().r2; }

RatePair PiecewiseLinearRegion::ray_intersection(double slope) const {
  if (!(slope > 0.0) || !std::isfinite(slope))
    throw std::domain_error("ray_intersection: slope must be positive and finite");
  // g(v) = v.r2 - slope * v.r1 decreases along the vertex list; the ray
  // crosses where it changes sign. A crossing exactly at a vertex
  // returns the vertex, which is the facet with smaller r1.
  const auto g = [slope](const RatePair& v) { return v.r2 - slope * v.r1; };
  if (g(vertices_.front()) <= 0.0) return vertices_.front();
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const double ga = g(vertices_[i]);
    const double gb = g(vertices_[i + 1]);
    if (ga >= 0.0 && gb <= 0.0) {
      if (gb == 0.0 && i + 2 < vertices_.size()) {
        // Ray hits the vertex shared by two facets; keep the vertex.
        return vertices_[i + 1];
      }
      const double t = ga / (ga - gb);
      return RatePair(vertices_[i].r1 + t * (vertices_[i + 1].r1 - vertices_[i].r1),
                      vertices_[i].r2 + t * (vertices_[i + 1].r2 - vertices_[i].r2));
    }
  }
  return vertices_.back();
}

PiecewiseLinearRegion PiecewiseLinearRegion::deflated_per_user(double bits) const {
  std::vector<HalfPlane> out;
  out.reserve(halfplanes_.size());
  for (const auto& hp : halfplanes_)
    out.push_back({hp.a1, hp.a2, hp.b - bits * (hp.a1 + hp.a2)});
  return PiecewiseLinearRegion(std::move(out));
}

double gmac_capacity_f(const GmacParams& params, const RatePair& r) {
  const double g1 = gamma(params.p1);
  const double g2 = gamma(params.p2);
  const double gs = gamma(params.p1 + params.p2);
  if (r.r1 <= gamma(params.p1 / (1.0 + params.p2))) return r.r2 - g2;
  if (r.r2 <= gamma(params.p2 / (1.0 + params.p1))) return r.r1 - g1;
  return r.r1 + r.r2 - gs;
}

PiecewiseLinearRegion gmac_capacity_region(const GmacParams& params) {
  return PiecewiseLinearRegion({{1.0, 0.0, gamma(params.p1)},
                                {0.0, 1.0, gamma(params.p2)},
                                {1.0, 1.0, gamma(params.p1 + params.p2)}});
}

RatePair gbc_boundary_point(const GbcParams& params, double p1_split) {
  if (!std::isfinite(p1_split) || p1_split < 0.0 || p1_split > params.p)
    throw std::domain_error("gbc_boundary_point: power split must lie in [0, P]");
  const double ra = gamma(params.h1 * p1_split);
  const double rb = gamma(params.h2 * params.p) - gamma(params.h2 * p1_split);
  return params.swapped ? RatePair(rb, ra) : RatePair(ra, rb);
}

double gbc_capacity_f(const GbcParams& params, const RatePair& r) {
  const double r1 = params.swapped ? r.r2 : r.r1;
  const double r2 = params.swapped ? r.r1 : r.r2;
  return r2 + gamma(inverse_gamma(r1) * params.h2 / params.h1) -
         gamma(params.h2 * params.p);
}

Regime gic_regime(const GicParams& params) {
  const bool weak_a = params.a < 1.0;
  const bool weak_b = params.b < 1.0;
  if (weak_a && weak_b) return Regime::Weak;
  if (weak_a != weak_b) return Regime::Mixed;
  const bool very_a = params.a >= 1.0 + params.p2;
  const bool very_b = params.b >= 1.0 + params.p1;
  if (very_a && very_b) return Regime::VeryStrong;
  if (!very_a && !very_b) return Regime::Strong;
  throw UnsupportedRegime(
      "gic_regime: one link is very strong and the other merely strong; "
      "this combination is not classified");
}

PiecewiseLinearRegion gic_strong_capacity_region(const GicParams& params) {
  const Regime regime = gic_regime(params);
  if (regime != Regime::Strong && regime != Regime::VeryStrong)
    throw std::domain_error(
        "gic_strong_capacity_region: requires the strong or very strong regime");
  const double g1 = gamma(params.p1);
  const double g2 = gamma(params.p2);
  if (regime == Regime::VeryStrong)
    return PiecewiseLinearRegion({{1.0, 0.0, g1}, {0.0, 1.0, g2}});
  const double gsum = std::min(gamma(params.p1 + params.b * params.p2),
                               gamma(params.a * params.p1 + params.p2));
  return PiecewiseLinearRegion({{1.0, 0.0, g1}, {0.0, 1.0, g2}, {1.0, 1.0, gsum}});
}

GicBounds etkin_tse_wang_weak_bounds(const GicParams& params) {
  if (gic_regime(params) != Regime::Weak)
    throw std::domain_error(
        "etkin_tse_wang_weak_bounds: preset covers the weak regime only; "
        "supply explicit bound regions for the mixed regime");
  const double snr1 = params.p1, snr2 = params.p2;
  const double inr1 = params.b * params.p2;  // interference power at receiver 1
  const double inr2 = params.a * params.p1;
  std::vector<HalfPlane> outer{
      {1.0, 0.0, gamma(snr1)},
      {0.0, 1.0, gamma(snr2)},
      {1.0, 1.0, gamma(snr1 + inr1) + gamma(snr2 / (1.0 + inr2))},
      {1.0, 1.0, gamma(snr2 + inr2) + gamma(snr1 / (1.0 + inr1))},
      {1.0, 1.0,
       gamma(inr1 + snr1 / (1.0 + inr2)) + gamma(inr2 + snr2 / (1.0 + inr1))},
      {2.0, 1.0, gamma(snr1 + inr1) + gamma(snr1 / (1.0 + inr2)) +
                     gamma(inr2 + snr2 / (1.0 + inr1))},
      {1.0, 2.0, gamma(snr2 + inr2) + gamma(snr2 / (1.0 + inr1)) +
                     gamma(inr1 + snr1 / (1.0 + inr2))}};
  PiecewiseLinearRegion outer_region(outer);
  PiecewiseLinearRegion inner_region = outer_region.deflated_per_user(1.0);
  return GicBounds{std::move(inner_region), std::move(outer_region)};
}

}  // namespace ctr

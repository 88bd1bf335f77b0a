#include "ctr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

namespace ctr {

bool membership_oracle(const ConstrainedPredicate& constrained_member,
                       const Load& load, const TimePair& d) {
  if (!d.finite() || d.d1 <= 0.0 || d.d2 <= 0.0)
    throw std::domain_error("membership_oracle: completion times must be finite");
  return constrained_member(
      ConstrainedRatePoint(load.tau1 / d.d1, load.tau2 / d.d2, d.d1 / d.d2));
}

double GridReport::worst_distance() const noexcept {
  double worst = 0.0;
  for (const auto& d : disagreements) worst = std::max(worst, d.boundary_distance);
  return worst;
}

namespace {

// Distance from d to the predicate's boundary along the diagonal
// direction. Monotone closure makes membership monotone along the
// diagonal, so a sign change brackets the boundary.
double diagonal_boundary_distance(const TimePredicate& member, const TimePair& d) {
  const bool at = member(d);
  const double scale = std::max({1.0, d.d1, d.d2});
  double step = 1e-12 * scale;
  double lo = 0.0, hi = 0.0;
  const double sign = at ? -1.0 : 1.0;  // move inward when outside
  bool bracketed = false;
  for (int i = 0; i < 80; ++i) {
    const double t = sign * step;
    const double x1 = d.d1 + t, x2 = d.d2 + t;
    if (x1 <= 0.0 || x2 <= 0.0) break;
    if (member(TimePair(x1, x2)) != at) {
      hi = step;
      bracketed = true;
      break;
    }
    lo = step;
    step *= 2.0;
  }
  if (!bracketed) return std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100 && hi - lo > 1e-15 * scale; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double x1 = d.d1 + sign * mid, x2 = d.d2 + sign * mid;
    if (x1 <= 0.0 || x2 <= 0.0) break;
    if (member(TimePair(x1, x2)) != at)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi) * std::numbers::sqrt2;
}

}  // namespace

namespace {

std::size_t grid_thread_count(std::size_t rows) {
  std::size_t n = std::min<std::size_t>(std::thread::hardware_concurrency(), 8);
  if (const char* cap = std::getenv("CTR_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
  }
  return std::max<std::size_t>(1, std::min(n, rows));
}

}  // namespace

GridReport compare_on_grid(const TimePredicate& closed_form, const TimePredicate& oracle,
                           const TimePair& lo, const TimePair& hi, std::size_t nx,
                           std::size_t ny) {
  if (nx < 2 || ny < 2 || !(hi.d1 > lo.d1) || !(hi.d2 > lo.d2))
    throw std::invalid_argument("compare_on_grid: invalid box or grid dims");
  GridReport report;
  report.nx = nx;
  report.ny = ny;

  // Rows are split across threads (capped by CTR_THREADS) and merged in
  // row order, so the report is identical at any thread count.
  const std::size_t nthreads = grid_thread_count(nx);
  std::vector<std::size_t> agree(nthreads, 0);
  std::vector<std::vector<GridDisagreement>> found(nthreads);
  const auto run_rows = [&](std::size_t t) {
    for (std::size_t i = t; i < nx; i += nthreads) {
      const double d1 =
          lo.d1 + (hi.d1 - lo.d1) * static_cast<double>(i) / static_cast<double>(nx - 1);
      for (std::size_t j = 0; j < ny; ++j) {
        const TimePair d(d1, lo.d2 + (hi.d2 - lo.d2) * static_cast<double>(j) /
                                         static_cast<double>(ny - 1));
        const bool a = closed_form(d);
        const bool b = oracle(d);
        if (a == b)
          ++agree[t];
        else
          found[t].push_back({d, a, b, diagonal_boundary_distance(closed_form, d)});
      }
    }
  };
  if (nthreads == 1) {
    run_rows(0);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < nthreads; ++t) workers.emplace_back(run_rows, t);
    for (auto& w : workers) w.join();
  }
  for (std::size_t t = 0; t < nthreads; ++t) report.agreements += agree[t];
  std::vector<GridDisagreement> merged;
  for (auto& f : found)
    merged.insert(merged.end(), f.begin(), f.end());
  std::sort(merged.begin(), merged.end(),
            [](const GridDisagreement& l, const GridDisagreement& r) {
              if (l.d.d1 != r.d.d1) return l.d.d1 < r.d.d1;
              return l.d.d2 < r.d.d2;
            });
  report.disagreements = std::move(merged);
  return report;
}

std::vector<ConvexityWitness> convexity_probe(const TimePredicate& member,
                                              const TimePair& lo, const TimePair& hi,
                                              std::size_t samples, std::uint64_t seed,
                                              SubregionPairing pairing) {
  if (!(hi.d1 > lo.d1) || !(hi.d2 > lo.d2))
    throw std::invalid_argument("convexity_probe: invalid box");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u1(lo.d1, hi.d1);
  std::uniform_real_distribution<double> u2(lo.d2, hi.d2);

  const auto side_ok = [&](const TimePair& d, bool first) {
    return first ? d.d1 <= d.d2 : d.d1 >= d.d2;
  };
  const auto draw_member = [&](bool first_side) {
    // Rejection sampling; the box is expected to overlap the region.
    for (int tries = 0; tries < 10000; ++tries) {
      const TimePair d(u1(rng), u2(rng));
      if (side_ok(d, first_side) && member(d)) return d;
    }
    throw std::runtime_error("convexity_probe: box contains too few members");
  };

  std::vector<ConvexityWitness> witnesses;
  for (std::size_t k = 0; k < samples; ++k) {
    bool side_a, side_b;
    switch (pairing) {
      case SubregionPairing::Straddle:
        side_a = true;
        side_b = false;
        break;
      case SubregionPairing::BothFirst:
        side_a = side_b = true;
        break;
      case SubregionPairing::BothSecond:
      default:
        side_a = side_b = false;
        break;
    }
    const TimePair a = draw_member(side_a);
    const TimePair b = draw_member(side_b);
    const TimePair mid(0.5 * (a.d1 + b.d1), 0.5 * (a.d2 + b.d2));
    if (!member(mid)) witnesses.push_back({a, b, mid});
  }
  return witnesses;
}

RelayExampleReport relay_example_check(double p, double p_r, double tau) {
  if (!(p > 0.0) || !(p_r > 0.0) || !(tau > 0.0) || !std::isfinite(p) ||
      !std::isfinite(p_r) || !std::isfinite(tau))
    throw std::domain_error("relay_example_check: powers and tau must be positive");
  // Interference decoding at receiver 2 accumulates 2 tau gamma(P/(1+P))
  // during the joint phase plus 4 tau gamma(P_R) of relay forwarding;
  // the scheme needs 2 tau gamma(P).
  const double surplus =
      2.0 * tau * gamma(p / (1.0 + p)) + 4.0 * tau * gamma(p_r) - 2.0 * tau * gamma(p);
  // Any independent two-phase operation would need sum rate 2 gamma(P)
  // in the joint phase, above the channel's sum-capacity bound.
  const double gap = 2.0 * gamma(p) - gamma(2.0 * p + p_r + 2.0 * p * p_r);
  return RelayExampleReport{surplus, gap, surplus > 0.0 && gap > 0.0};
}

}  // namespace ctr

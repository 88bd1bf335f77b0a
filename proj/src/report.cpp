#include "ctr/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ctr {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<BoundarySegment> boundary_segments(const BoundaryCurve& curve) {
  double lo1 = curve.vertical_ray_origin.d1, hi1 = lo1;
  double lo2 = curve.horizontal_ray_origin.d2, hi2 = lo2;
  const auto grow = [&](const TimePair& p) {
    lo1 = std::min(lo1, p.d1);
    hi1 = std::max(hi1, p.d1);
    lo2 = std::min(lo2, p.d2);
    hi2 = std::max(hi2, p.d2);
  };
  grow(curve.horizontal_ray_origin);
  grow(curve.diag_ray_origin);
  for (const auto& p : curve.curve_samples) grow(p);
  const double extent = 2.0 * std::max(hi1 - lo1, hi2 - lo2);

  // The curve runs d_B -> d_C -> d_A; split it at the diagonal point.
  std::vector<TimePair> first_arc, second_arc;
  bool past_diag = false;
  for (const auto& p : curve.curve_samples) {
    const bool at_diag =
        std::abs(p.d1 - curve.diag_ray_origin.d1) <= 1e-9 * std::max(1.0, p.d1) &&
        std::abs(p.d2 - curve.diag_ray_origin.d2) <= 1e-9 * std::max(1.0, p.d2);
    if (!past_diag) first_arc.push_back(p);
    if (at_diag) past_diag = true;
    if (past_diag) second_arc.push_back(p);
  }
  if (!past_diag) {  // diagonal origin not among samples; split by side
    first_arc.clear();
    second_arc.clear();
    for (const auto& p : curve.curve_samples)
      (p.d2 >= p.d1 ? first_arc : second_arc).push_back(p);
  }

  const TimePair& b = curve.vertical_ray_origin;
  const TimePair& a = curve.horizontal_ray_origin;
  const TimePair& c = curve.diag_ray_origin;
  return {
      {"vray", {b, TimePair(b.d1, b.d2 + extent)}},
      {"curve1", std::move(first_arc)},
      {"diag", {c, TimePair(c.d1 + extent, c.d2 + extent)}},
      {"curve2", std::move(second_arc)},
      {"hray", {a, TimePair(a.d1 + extent, a.d2)}},
  };
}

std::string boundary_csv(const BoundaryCurve& curve) {
  std::ostringstream out;
  out << "segment,d1,d2\n";
  for (const auto& seg : boundary_segments(curve))
    for (const auto& p : seg.points)
      out << seg.label << ',' << format_number(p.d1) << ',' << format_number(p.d2)
          << '\n';
  return out.str();
}

namespace {

nlohmann::json time_pair_json(const TimePair& p) {
  return nlohmann::json{{"d1", p.d1}, {"d2", p.d2}};
}

}  // namespace

std::string region_json(const BoundaryCurve& curve,
                        const std::vector<std::pair<std::string, double>>& config_echo) {
  nlohmann::json j;
  j["spec"] = 1;
  for (const auto& [k, v] : config_echo) j[k] = v;
  j["vertical_ray_origin"] = time_pair_json(curve.vertical_ray_origin);
  j["horizontal_ray_origin"] = time_pair_json(curve.horizontal_ray_origin);
  j["diag_ray_origin"] = time_pair_json(curve.diag_ray_origin);
  j["curve_sample_count"] = curve.curve_samples.size();
  return j.dump(2) + "\n";
}

std::string minimizer_json(const Minimizer& m,
                           const std::vector<std::pair<std::string, double>>& config_echo) {
  nlohmann::json j;
  j["spec"] = 1;
  for (const auto& [k, v] : config_echo) j[k] = v;
  j["d"] = time_pair_json(m.d);
  j["objective_value"] = m.objective_value;
  j["active_branch"] = m.active_branch;
  return j.dump(2) + "\n";
}

std::string trace_csv(const BlockPowerTrace& trace) {
  std::ostringstream out;
  out << "c,d1,d2,p_first,p_second\n";
  for (std::size_t i = 0; i < trace.c_grid.size(); ++i)
    out << format_number(trace.c_grid[i]) << ',' << format_number(trace.points[i].d1)
        << ',' << format_number(trace.points[i].d2) << ','
        << format_number(trace.splits[i].p_first) << ','
        << format_number(trace.splits[i].p_second) << '\n';
  return out.str();
}

std::string grid_report_json(const GridReport& report, double slack) {
  nlohmann::json j;
  j["spec"] = 1;
  j["nx"] = report.nx;
  j["ny"] = report.ny;
  j["agreements"] = report.agreements;
  j["boundary_slack"] = slack;
  nlohmann::json arr = nlohmann::json::array();
  std::size_t beyond = 0;
  for (const auto& d : report.disagreements) {
    arr.push_back(nlohmann::json{{"boundary_distance", d.boundary_distance},
                                 {"closed_form", d.closed_form},
                                 {"d", time_pair_json(d.d)},
                                 {"oracle", d.oracle}});
    if (!(d.boundary_distance <= slack)) ++beyond;
  }
  j["disagreements"] = std::move(arr);
  j["disagreements_beyond_slack"] = beyond;
  return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_boundary_csv(const BoundaryCurve& curve, const std::filesystem::path& path) {
  write_text_file(path, boundary_csv(curve));
}

std::string segments_svg(const std::vector<BoundarySegment>& segments) {
  constexpr double kWidth = 800.0, kHeight = 600.0;
  double lo1 = 0.0, hi1 = 1.0, lo2 = 0.0, hi2 = 1.0;
  bool first = true;
  for (const auto& seg : segments) {
    for (const auto& p : seg.points) {
      if (first) {
        lo1 = hi1 = p.d1;
        lo2 = hi2 = p.d2;
        first = false;
      }
      lo1 = std::min(lo1, p.d1);
      hi1 = std::max(hi1, p.d1);
      lo2 = std::min(lo2, p.d2);
      hi2 = std::max(hi2, p.d2);
    }
  }
  const double m1 = 0.1 * std::max(hi1 - lo1, 1e-9);
  const double m2 = 0.1 * std::max(hi2 - lo2, 1e-9);
  lo1 -= m1;
  hi1 += m1;
  lo2 -= m2;
  hi2 += m2;
  const auto sx = [&](double x) { return (x - lo1) / (hi1 - lo1) * kWidth; };
  const auto sy = [&](double y) { return kHeight - (y - lo2) / (hi2 - lo2) * kHeight; };

  const char* colors[] = {"#1f6fb2", "#b23a1f", "#3a9e4e", "#7a4ea0", "#a08a1f"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
  out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << format_number(sx(lo1)) << "\" y1=\"" << format_number(sy(0.0))
      << "\" x2=\"" << format_number(sx(hi1)) << "\" y2=\"" << format_number(sy(0.0))
      << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << format_number(sx(0.0)) << "\" y1=\"" << format_number(sy(lo2))
      << "\" x2=\"" << format_number(sx(0.0)) << "\" y2=\"" << format_number(sy(hi2))
      << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  std::size_t idx = 0;
  for (const auto& seg : segments) {
    if (seg.points.empty()) continue;
    const bool dashed = seg.label.size() > 7 &&
                        seg.label.compare(seg.label.size() - 7, 7, "-dashed") == 0;
    out << "<polyline fill=\"none\" stroke=\"" << colors[idx % 5] << "\""
        << (dashed ? " stroke-dasharray=\"6 4\"" : "") << " stroke-width=\"1.5\" points=\"";
    for (const auto& p : seg.points)
      out << format_number(sx(p.d1)) << ',' << format_number(sy(p.d2)) << ' ';
    out << "\"/>\n";
    ++idx;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ctr

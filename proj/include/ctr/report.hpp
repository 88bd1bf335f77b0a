/**
 * Serialization of computed results: boundary CSV, result JSON, trace
 * CSV and SVG plots. All numeric output uses 12 significant digits and
 * '\n' line endings; JSON objects keep lexicographic key order so that
 * identical inputs produce byte-identical files.
 *
 * The SVG writers render the same segment lists the CSV writers emit;
 * plotting never recomputes or alters numbers.
 */
#ifndef CTR_REPORT_HPP
#define CTR_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "ctr/block_power.hpp"
#include "ctr/ct_region.hpp"
#include "ctr/optimize.hpp"
#include "ctr/oracle.hpp"

namespace ctr {

/// One plottable polyline with the segment label used in the CSV.
struct BoundarySegment {
  std::string label;  // vray | curve1 | diag | curve2 | hray
  std::vector<TimePair> points;
};

/// Splits a boundary curve into its five CSV segments. Rays carry two
/// points each: the origin and the origin advanced along the ray by
/// twice the larger bounding-box dimension of the curve.
std::vector<BoundarySegment> boundary_segments(const BoundaryCurve& curve);

/// CSV with header "segment,d1,d2"; rows follow boundary_segments order.
std::string boundary_csv(const BoundaryCurve& curve);

/// Region description JSON: the ray origins, sample count, and channel
/// echo keys supplied by the caller.
std::string region_json(const BoundaryCurve& curve,
                        const std::vector<std::pair<std::string, double>>& config_echo);

std::string minimizer_json(const Minimizer& m,
                           const std::vector<std::pair<std::string, double>>& config_echo);

/// CSV with header "c,d1,d2,p_first,p_second" for a block-power trace.
std::string trace_csv(const BlockPowerTrace& trace);

std::string grid_report_json(const GridReport& report, double slack);

/// 800x600 SVG of labelled segments, axes auto-scaled to the data
/// bounding box plus a 10% margin. Segments whose label ends in
/// "-dashed" are stroked dashed (outer bounds, per-symbol overlays).
std::string segments_svg(const std::vector<BoundarySegment>& segments);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

/// Writes boundary_csv to disk.
void emit_boundary_csv(const BoundaryCurve& curve, const std::filesystem::path& path);

/// Formats a double with 12 significant digits.
std::string format_number(double v);

}  // namespace ctr

#endif  // CTR_REPORT_HPP

// Command-line front end: parse a channel/load/weight configuration,
// run region / minimize / block-power / verify computations, and emit
// CSV / JSON / SVG artifacts. Exit codes: 0 success, 1 verify found
// disagreements beyond the slack, 2 configuration errors, 3 numerical
// or I/O failures (with the failing operation named on stderr).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctr/block_power.hpp"
#include "ctr/channel.hpp"
#include "ctr/ct_region.hpp"
#include "ctr/optimize.hpp"
#include "ctr/oracle.hpp"
#include "ctr/report.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string channel;
  std::optional<double> p1, p2, h1, h2, p, a, b;
  std::optional<double> tau1, tau2;
  double w = 0.5;
  std::size_t samples = 512;
  std::size_t grid = 100;
  std::uint64_t seed = 1;
  double slack = 1e-7;
  std::string csv_path, json_path, svg_path, bounds_path;
};

double require(const std::optional<double>& v, const char* name) {
  if (!v) throw CLI::ValidationError(std::string("missing required value: ") + name);
  return *v;
}

ctr::Load make_load(const Options& o) {
  return ctr::Load(require(o.tau1, "tau1"), require(o.tau2, "tau2"));
}

ctr::GicBounds load_bounds_file(const std::string& path, const ctr::GicParams& params) {
  if (path.empty()) return ctr::etkin_tse_wang_weak_bounds(params);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bounds file: " + path);
  json j = json::parse(in);
  const auto region_of = [](const json& node) {
    std::vector<ctr::HalfPlane> hps;
    for (const auto& h : node.at("halfplanes"))
      hps.push_back({h.at("a1").get<double>(), h.at("a2").get<double>(),
                     h.at("b").get<double>()});
    return ctr::PiecewiseLinearRegion(hps);
  };
  return ctr::GicBounds{region_of(j.at("inner")), region_of(j.at("outer"))};
}

std::vector<std::pair<std::string, double>> channel_echo(const Options& o) {
  std::vector<std::pair<std::string, double>> echo;
  if (o.channel == "gmac") {
    echo = {{"p1", *o.p1}, {"p2", *o.p2}};
  } else if (o.channel == "gbc") {
    echo = {{"h1", *o.h1}, {"h2", *o.h2}, {"p", *o.p}};
  } else {
    echo = {{"p1", *o.p1}, {"p2", *o.p2}, {"a", *o.a}, {"b", *o.b}};
  }
  echo.emplace_back("tau1", *o.tau1);
  echo.emplace_back("tau2", *o.tau2);
  return echo;
}

void write_svg_if_asked(const Options& o, const std::vector<ctr::BoundarySegment>& segs) {
  if (!o.svg_path.empty())
    ctr::write_text_file(o.svg_path, ctr::segments_svg(segs));
}

int run_region(const Options& o) {
  const ctr::Load load = make_load(o);
  const std::string csv = o.csv_path.empty() ? "region.csv" : o.csv_path;
  const std::string jsn = o.json_path.empty() ? "region.json" : o.json_path;

  if (o.channel == "gic") {
    const ctr::GicParams params(require(o.p1, "p1"), require(o.p2, "p2"),
                                require(o.a, "a"), require(o.b, "b"));
    const ctr::Regime regime = ctr::gic_regime(params);
    if (regime == ctr::Regime::Weak || regime == ctr::Regime::Mixed) {
      const ctr::GicBounds bounds = load_bounds_file(o.bounds_path, params);
      const double r1s = ctr::gamma(params.p1);
      const double r2s = ctr::gamma(params.p2);
      const auto inner =
          ctr::generic_ct_boundary(bounds.inner, r1s, r2s, load, o.samples);
      const auto outer =
          ctr::generic_ct_boundary(bounds.outer, r1s, r2s, load, o.samples);
      const std::filesystem::path base(csv);
      const auto with_suffix = [&](const char* tag) {
        std::filesystem::path p = base;
        p.replace_filename(base.stem().string() + tag + base.extension().string());
        return p;
      };
      ctr::emit_boundary_csv(inner, with_suffix("_inner"));
      ctr::emit_boundary_csv(outer, with_suffix("_outer"));
      json j;
      j["spec"] = 1;
      for (const auto& [k, v] : channel_echo(o)) j[k] = v;
      j["inner"] = json::parse(ctr::region_json(inner, {}));
      j["outer"] = json::parse(ctr::region_json(outer, {}));
      ctr::write_text_file(jsn, j.dump(2) + "\n");
      auto segs = ctr::boundary_segments(inner);
      for (auto seg : ctr::boundary_segments(outer)) {
        seg.label += "-dashed";  // outer bound plotted dashed
        segs.push_back(std::move(seg));
      }
      write_svg_if_asked(o, segs);
      return 0;
    }
    // Exact regimes map through the generic pipeline.
    const auto region = ctr::gic_strong_capacity_region(params);
    const auto curve = ctr::generic_ct_boundary(region, ctr::gamma(params.p1),
                                                ctr::gamma(params.p2), load, o.samples);
    ctr::emit_boundary_csv(curve, csv);
    ctr::write_text_file(jsn, ctr::region_json(curve, channel_echo(o)));
    write_svg_if_asked(o, ctr::boundary_segments(curve));
    return 0;
  }

  ctr::BoundaryCurve curve =
      o.channel == "gmac"
          ? ctr::gmac_region_boundary(
                ctr::GmacParams(require(o.p1, "p1"), require(o.p2, "p2")), load,
                o.samples)
          : ctr::gbc_region_boundary(
                ctr::GbcParams(require(o.h1, "h1"), require(o.h2, "h2"),
                               require(o.p, "p")),
                load, o.samples);
  ctr::emit_boundary_csv(curve, csv);
  ctr::write_text_file(jsn, ctr::region_json(curve, channel_echo(o)));
  write_svg_if_asked(o, ctr::boundary_segments(curve));
  return 0;
}

int run_minimize(const Options& o) {
  const ctr::Load load = make_load(o);
  const ctr::WeightedObjective obj(o.w);
  ctr::Minimizer m =
      o.channel == "gmac"
          ? ctr::gmac_min_weighted(
                ctr::GmacParams(require(o.p1, "p1"), require(o.p2, "p2")), load, obj)
          : ctr::gbc_min_weighted(ctr::GbcParams(require(o.h1, "h1"),
                                                 require(o.h2, "h2"), require(o.p, "p")),
                                  load, obj);
  auto echo = channel_echo(o);
  echo.emplace_back("w", o.w);
  const std::string jsn = o.json_path.empty() ? "minimize.json" : o.json_path;
  ctr::write_text_file(jsn, ctr::minimizer_json(m, echo));
  return 0;
}

int run_block_power(const Options& o) {
  const ctr::Load load = make_load(o);
  ctr::BlockPowerTrace trace;
  std::vector<ctr::BoundarySegment> overlay;
  if (o.channel == "gmac") {
    const ctr::GmacParams params(require(o.p1, "p1"), require(o.p2, "p2"));
    trace = ctr::gmac_block_boundary(params, load, o.grid);
    const auto per_symbol = ctr::gmac_region_boundary(params, load, o.samples);
    for (auto seg : ctr::boundary_segments(per_symbol)) {
      seg.label += "-dashed";  // per-symbol overlay plotted dashed
      overlay.push_back(std::move(seg));
    }
  } else if (o.channel == "gbc") {
    const ctr::GbcParams params(require(o.h1, "h1"), require(o.h2, "h2"),
                                require(o.p, "p"));
    trace = ctr::gbc_block_boundary(params, load, o.grid);
    const auto per_symbol = ctr::gbc_region_boundary(params, load, o.samples);
    for (auto seg : ctr::boundary_segments(per_symbol)) {
      seg.label += "-dashed";
      overlay.push_back(std::move(seg));
    }
  } else {
    throw CLI::ValidationError("block-power supports gmac and gbc channels");
  }
  const std::string csv = o.csv_path.empty() ? "block_power.csv" : o.csv_path;
  ctr::write_text_file(csv, ctr::trace_csv(trace));
  if (!o.svg_path.empty()) {
    overlay.push_back({"block-trace", trace.points});
    ctr::write_text_file(o.svg_path, ctr::segments_svg(overlay));
  }
  return 0;
}

int run_verify(const Options& o) {
  const ctr::Load load = make_load(o);
  ctr::TimePredicate closed, oracle;
  double s1, s2;  // solo completion times fix the comparison box

  if (o.channel == "gmac") {
    const ctr::GmacParams params(require(o.p1, "p1"), require(o.p2, "p2"));
    s1 = load.tau1 / ctr::gamma(params.p1);
    s2 = load.tau2 / ctr::gamma(params.p2);
    closed = [params, load](const ctr::TimePair& d) {
      return ctr::gmac_region_member(params, load, d);
    };
    const auto region = ctr::gmac_capacity_region(params);
    const double r1s = ctr::gamma(params.p1), r2s = ctr::gamma(params.p2);
    oracle = [region, r1s, r2s, load](const ctr::TimePair& d) {
      return ctr::membership_oracle(
          [&](const ctr::ConstrainedRatePoint& pt) {
            return ctr::mac_constrained_member(region, r2s, r1s, pt);
          },
          load, d);
    };
  } else if (o.channel == "gbc") {
    const ctr::GbcParams params(require(o.h1, "h1"), require(o.h2, "h2"),
                                require(o.p, "p"));
    s1 = load.tau1 / ctr::gamma(params.h1 * params.p);
    s2 = load.tau2 / ctr::gamma(params.h2 * params.p);
    const ctr::GbcRegion region(params, load);
    closed = [region](const ctr::TimePair& d) { return region.contains(d); };
    oracle = [params, load](const ctr::TimePair& d) {
      return ctr::membership_oracle(
          [&](const ctr::ConstrainedRatePoint& pt) {
            return ctr::gbc_constrained_member(params, pt);
          },
          load, d);
    };
  } else {
    const ctr::GicParams params(require(o.p1, "p1"), require(o.p2, "p2"),
                                require(o.a, "a"), require(o.b, "b"));
    s1 = load.tau1 / ctr::gamma(params.p1);
    s2 = load.tau2 / ctr::gamma(params.p2);
    const ctr::Regime regime = ctr::gic_regime(params);
    if (regime == ctr::Regime::Weak || regime == ctr::Regime::Mixed) {
      // No closed form exists; check the bound sandwich instead:
      // membership of the inner bound must imply membership of the outer.
      const ctr::GicBounds bounds = load_bounds_file(o.bounds_path, params);
      closed = [params, load, bounds](const ctr::TimePair& d) {
        return ctr::gic_region_member(params, load, d, bounds.inner, bounds.outer)
            .inner_member;
      };
      oracle = [params, load, bounds](const ctr::TimePair& d) {
        const auto m =
            ctr::gic_region_member(params, load, d, bounds.inner, bounds.outer);
        return m.inner_member ? m.outer_member : m.inner_member;
      };
    } else {
      closed = [params, load](const ctr::TimePair& d) {
        return ctr::gic_region_member(params, load, d).member;
      };
      const auto region = ctr::gic_strong_capacity_region(params);
      const double r1s = ctr::gamma(params.p1), r2s = ctr::gamma(params.p2);
      oracle = [region, r1s, r2s, load](const ctr::TimePair& d) {
        return ctr::membership_oracle(
            [&](const ctr::ConstrainedRatePoint& pt) {
              return ctr::mac_constrained_member(region, r2s, r1s, pt);
            },
            load, d);
      };
    }
  }

  const ctr::TimePair lo(0.5 * s1, 0.5 * s2);
  const ctr::TimePair hi(3.0 * (s1 + s2), 3.0 * (s1 + s2));
  const ctr::GridReport report = ctr::compare_on_grid(closed, oracle, lo, hi, o.grid, o.grid);
  const std::string jsn = o.json_path.empty() ? "verify.json" : o.json_path;
  ctr::write_text_file(jsn, ctr::grid_report_json(report, o.slack));
  std::size_t beyond = 0;
  for (const auto& d : report.disagreements)
    if (!(d.boundary_distance <= o.slack)) ++beyond;
  std::cout << "verify: " << report.cells() << " cells, " << report.disagreements.size()
            << " disagreements, " << beyond << " beyond slack " << o.slack << "\n";
  return beyond == 0 ? 0 : 1;
}

void load_config_file(const std::string& path, Options& o) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  json j = json::parse(in);
  const auto get_num = [&](const char* key, auto& slot) {
    if (j.contains(key)) slot = j.at(key).get<double>();
  };
  if (j.contains("channel")) o.channel = j.at("channel").get<std::string>();
  get_num("p1", o.p1);
  get_num("p2", o.p2);
  get_num("h1", o.h1);
  get_num("h2", o.h2);
  get_num("p", o.p);
  get_num("a", o.a);
  get_num("b", o.b);
  get_num("tau1", o.tau1);
  get_num("tau2", o.tau2);
  if (j.contains("w")) o.w = j.at("w").get<double>();
  if (j.contains("samples")) o.samples = j.at("samples").get<std::size_t>();
  if (j.contains("grid")) o.grid = j.at("grid").get<std::size_t>();
  if (j.contains("seed")) o.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("slack")) o.slack = j.at("slack").get<double>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"completion-time regions for two-user Gaussian channels"};
  app.require_subcommand(1);

  Options opt;
  std::string config_path, tau_arg;
  double p1 = 0, p2 = 0, h1 = 0, h2 = 0, p = 0, a = 0, b = 0;
  double w = 0.5, slack = 1e-7;
  std::size_t samples = 512, grid = 100;
  std::uint64_t seed = 1;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file; flags override it");
    cmd->add_option("--channel", opt.channel, "gmac | gbc | gic");
    cmd->add_option("--p1", p1, "user 1 power");
    cmd->add_option("--p2", p2, "user 2 power");
    cmd->add_option("--h1", h1, "receiver 1 gain");
    cmd->add_option("--h2", h2, "receiver 2 gain");
    cmd->add_option("--p", p, "broadcast power");
    cmd->add_option("--a", a, "interfering gain of user 1 at receiver 2");
    cmd->add_option("--b", b, "interfering gain of user 2 at receiver 1");
    cmd->add_option("--tau", tau_arg, "bit pools tau1,tau2");
    cmd->add_option("--csv", opt.csv_path, "CSV output path");
    cmd->add_option("--json", opt.json_path, "JSON output path");
    cmd->add_option("--svg", opt.svg_path, "SVG output path");
    cmd->add_option("--bounds", opt.bounds_path,
                    "JSON file with inner/outer rate-region bounds (gic weak/mixed)");
    cmd->add_option("--samples", samples, "boundary samples per arc");
    cmd->add_option("--grid", grid, "grid points (per axis or per subregion)");
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--slack", slack, "boundary slack for verify");
  };

  CLI::App* region = app.add_subcommand("region", "boundary CSV/JSON (+ optional SVG)");
  CLI::App* minimize = app.add_subcommand("minimize", "weighted-sum minimizer JSON");
  minimize->add_option("--w", w, "weight on d1, in [0,1]");
  CLI::App* block = app.add_subcommand("block-power", "block-power trace CSV (+ SVG)");
  CLI::App* verify = app.add_subcommand("verify", "closed form vs oracle grid report");
  for (CLI::App* cmd : {region, minimize, block, verify}) add_common(cmd);

  CLI::App* active = nullptr;
  try {
    app.parse(argc, argv);
    active = app.get_subcommands().front();
    opt.command = active->get_name();

    if (!config_path.empty()) load_config_file(config_path, opt);
    const auto override_if = [&](const char* name, auto& slot, auto value) {
      if (active->count(name) > 0) slot = value;
    };
    override_if("--p1", opt.p1, p1);
    override_if("--p2", opt.p2, p2);
    override_if("--h1", opt.h1, h1);
    override_if("--h2", opt.h2, h2);
    override_if("--p", opt.p, p);
    override_if("--a", opt.a, a);
    override_if("--b", opt.b, b);
    if (opt.command == "minimize") override_if("--w", opt.w, w);
    override_if("--samples", opt.samples, samples);
    override_if("--grid", opt.grid, grid);
    override_if("--seed", opt.seed, seed);
    override_if("--slack", opt.slack, slack);
    if (active->count("--tau") > 0) {
      const auto comma = tau_arg.find(',');
      if (comma == std::string::npos)
        throw CLI::ValidationError("--tau expects tau1,tau2");
      opt.tau1 = std::stod(tau_arg.substr(0, comma));
      opt.tau2 = std::stod(tau_arg.substr(comma + 1));
    }
    if (opt.channel.empty())
      throw CLI::ValidationError("a channel is required (--channel or config file)");
    if (opt.channel != "gmac" && opt.channel != "gbc" && opt.channel != "gic")
      throw CLI::ValidationError("unknown channel: " + opt.channel);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (opt.command == "region") return run_region(opt);
    if (opt.command == "minimize") return run_minimize(opt);
    if (opt.command == "block-power") return run_block_power(opt);
    return run_verify(opt);
  } catch (const CLI::Error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << opt.command << " failed: " << e.what() << "\n";
    return 3;
  }
}

#include "webs/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "webs/verification.hpp"
#include "webs/webviz.hpp"

namespace webs {

namespace {

using nlohmann::json;

// Malformed flag values are usage errors (exit 2), not domain errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_csv(const std::string& text, std::size_t count,
                              const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      values.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + text + "' is not a list of numbers");
    }
  }
  if (values.size() != count)
    throw UsageError(flag + " expects " + std::to_string(count) +
                     " comma-separated numbers, got '" + text + "'");
  return values;
}

WebId web_from_flag(const std::string& name) {
  auto web = parse_web(name);
  if (!web) throw UsageError("--web must be one of w1, w2, w3, w4");
  return *web;
}

void emit(std::ostream& out, const json& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

json reports_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

void print_report_lines(std::ostream& out,
                        const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    out << (r.passed ? "PASS " : "FAIL ") << r.check_name;
    if (r.web) out << " web=" << web_name(*r.web);
    out << " samples=" << r.samples << " max_error=" << r.max_error
        << " tolerance=" << r.tolerance << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"confocal webs: coordinate charts, verification and figures "
               "for the 3-webs of confocal conics and Apollonian pencils"};
  app.require_subcommand(1);

  std::string point_arg, coords_arg, web_arg, suite_arg, shift_arg, window_arg,
      out_arg;
  std::uint64_t seed = 42;
  int samples = 10000;
  int members = 100;
  double step = std::log(2.0);
  double k1 = 0.0;
  bool pretty = false;

  auto* eval_cmd = app.add_subcommand("eval", "focal measures of a point");
  eval_cmd->add_option("--point", point_arg, "point S,T")->required();
  eval_cmd->add_flag("--pretty", pretty, "indent the JSON output");

  auto* map_cmd = app.add_subcommand("map", "chart coordinates to plane point");
  map_cmd->add_option("--web", web_arg, "w1|w2|w3|w4")->required();
  map_cmd->add_option("--coords", coords_arg, "chart coordinates X,Y")->required();
  map_cmd->add_flag("--pretty", pretty, "indent the JSON output");

  auto* invert_cmd = app.add_subcommand("invert", "plane point to chart coordinates");
  invert_cmd->add_option("--web", web_arg, "w1|w2|w3|w4")->required();
  invert_cmd->add_option("--point", point_arg, "point S,T")->required();
  invert_cmd->add_flag("--pretty", pretty, "indent the JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--web", web_arg, "restrict to one web");
  verify_cmd->add_option("--suite", suite_arg, "only 'all' is defined");
  verify_cmd->add_option("--seed", seed, "PRNG seed (default 42)");
  verify_cmd->add_option("--samples", samples,
                         "base sample count (default 10000)");
  verify_cmd->add_flag("--pretty", pretty,
                       "print one human-readable line per check");

  auto* render_cmd = app.add_subcommand("render", "lattice figure of one web");
  render_cmd->add_option("--web", web_arg, "w1|w2|w3|w4")->required();
  auto* step_opt = render_cmd->add_option("--step", step, "lattice spacing (default ln 2)");
  render_cmd->add_option("--shift", shift_arg, "lattice shift TX,TY (default 0,0)");
  render_cmd->add_option("--window", window_arg,
                         "chart window X0,X1,Y0,Y1 (default per-web preset)");
  render_cmd->add_option("--out", out_arg, "output SVG path")->required();
  render_cmd->add_flag("--pretty", pretty, "indent the JSON output");

  auto* tangency_cmd =
      app.add_subcommand("tangency", "scaled-pencil tangency sweep and figure");
  tangency_cmd->add_option("--k1", k1, "elliptic-circle scale factor")->required();
  tangency_cmd->add_option("--members", members,
                           "pencil members per sweep (default 100)");
  tangency_cmd->add_option("--out", out_arg, "optional SVG figure path");
  tangency_cmd->add_flag("--pretty", pretty, "indent the JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) {
      auto v = parse_csv(point_arg, 2, "--point");
      FocalMeasures m = measures({v[0], v[1]});
      emit(out,
           json{{"a", m.a}, {"b", m.b}, {"f", m.f}, {"g", m.g}, {"h", m.h}, {"e", m.e}},
           pretty);
      return 0;
    }
    if (map_cmd->parsed()) {
      auto v = parse_csv(coords_arg, 2, "--coords");
      Point p = forward(web_from_flag(web_arg), {v[0], v[1]});
      emit(out, json{{"s", p.s}, {"t", p.t}}, pretty);
      return 0;
    }
    if (invert_cmd->parsed()) {
      auto v = parse_csv(point_arg, 2, "--point");
      WebCoords c = inverse(web_from_flag(web_arg), {v[0], v[1]});
      emit(out, json{{"x", c.x}, {"y", c.y}}, pretty);
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (!suite_arg.empty() && suite_arg != "all")
        throw UsageError("--suite only accepts 'all'");
      SuiteOptions options;
      options.seed = seed;
      options.samples = samples;
      if (!web_arg.empty()) options.web = web_from_flag(web_arg);
      auto reports = run_suite(options);
      if (pretty)
        print_report_lines(out, reports);
      else
        emit(out, reports_json(reports), false);
      return all_passed(reports) ? 0 : 1;
    }
    if (render_cmd->parsed()) {
      LatticeSpec spec = preset_lattice(web_from_flag(web_arg));
      if (step_opt->count() > 0) spec.step = step;
      if (!shift_arg.empty()) {
        auto v = parse_csv(shift_arg, 2, "--shift");
        spec.shift_x = v[0];
        spec.shift_y = v[1];
      }
      if (!window_arg.empty()) {
        auto v = parse_csv(window_arg, 4, "--window");
        if (!(v[0] < v[1]) || !(v[2] < v[3]))
          throw UsageError("--window expects X0 < X1 and Y0 < Y1");
        spec.window = {v[0], v[1], v[2], v[3]};
      }
      SvgScene scene = render_web_lattice(spec);
      write_svg(scene, out_arg);
      emit(out,
           json{{"out", out_arg},
                {"polylines", scene.polylines.size()},
                {"viewport", {scene.viewport.x0, scene.viewport.x1,
                              scene.viewport.y0, scene.viewport.y1}}},
           pretty);
      return 0;
    }
    if (tangency_cmd->parsed()) {
      VerificationReport report = verify_tangency_sweep(k1, members);
      if (!out_arg.empty()) write_svg(render_tangency_figure(k1, members), out_arg);
      if (pretty)
        print_report_lines(out, {report});
      else
        emit(out, to_json(report), false);
      return report.passed ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace webs

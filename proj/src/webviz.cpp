#include "webs/webviz.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <string>

namespace webs {

namespace {

// Chart-space margin that keeps rendered arcs clear of the measure-space
// guard bands (g -> +-1, h -> 0 or 2, e -> 2); clipping in chart space
// avoids unbounded polyline tails near the foci and axes.
constexpr double render_margin = 1e-3;
constexpr int max_depth = 24;
constexpr int base_segments = 8;

double point_segment_distance(Point p, Point a, Point b) {
  double dx = b.s - a.s, dy = b.t - a.t;
  double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return distance(p, a);
  double u = ((p.s - a.s) * dx + (p.t - a.t) * dy) / len2;
  u = std::clamp(u, 0.0, 1.0);
  return distance(p, {a.s + u * dx, a.t + u * dy});
}

// Adaptive polyline of eval over [u0, u1]: split until the midpoint lies
// within tol of the chord, depth-capped.
std::vector<Point> adaptive_polyline(const std::function<Point(double)>& eval,
                                     double u0, double u1, double tol) {
  std::vector<Point> out;
  std::function<void(double, Point, double, Point, int)> refine =
      [&](double a, Point pa, double b, Point pb, int depth) {
        double m = 0.5 * (a + b);
        Point pm = eval(m);
        if (depth >= max_depth || point_segment_distance(pm, pa, pb) <= tol) {
          out.push_back(pb);
          return;
        }
        refine(a, pa, m, pm, depth + 1);
        refine(m, pm, b, pb, depth + 1);
      };
  Point prev = eval(u0);
  out.push_back(prev);
  for (int i = 1; i <= base_segments; ++i) {
    double u = u0 + (u1 - u0) * i / base_segments;
    Point pu = eval(u);
    refine(u0 + (u1 - u0) * (i - 1) / base_segments, prev, u, pu, 0);
    prev = pu;
  }
  return out;
}

struct Interval {
  double lo, hi;
  bool empty() const { return !(hi - lo > 1e-9); }
};

// Chart point of the line {dir = level} at scalar parameter u (u is y for
// vertical chart lines, x otherwise).
WebCoords line_point(Direction dir, double level, double u) {
  switch (dir) {
    case Direction::XConst: return {level, u};
    case Direction::YConst: return {u, level};
    case Direction::DiagMinus: return {u, u - level};
    case Direction::DiagPlus: return {u, level - u};
  }
  return {0.0, 0.0};
}

// Parameter interval of line ∩ window ∩ (Omega shrunk by the render margin).
Interval line_interval(WebId web, Direction dir, double level,
                       const Box& window) {
  const bool x_positive = web != WebId::ConicsEllipticPencil;
  const bool y_negative = web != WebId::CircCircHyperbola;
  Interval iv{0.0, 0.0};
  switch (dir) {
    case Direction::XConst:
      if (level < window.x0 || level > window.x1) return {0, 0};
      if (x_positive && level < render_margin) return {0, 0};
      iv = {window.y0, window.y1};
      if (y_negative) iv.hi = std::min(iv.hi, -render_margin);
      return iv;
    case Direction::YConst:
      if (level < window.y0 || level > window.y1) return {0, 0};
      if (y_negative && level > -render_margin) return {0, 0};
      iv = {window.x0, window.x1};
      if (x_positive) iv.lo = std::max(iv.lo, render_margin);
      return iv;
    case Direction::DiagMinus:
      iv = {std::max(window.x0, level + window.y0),
            std::min(window.x1, level + window.y1)};
      if (x_positive) iv.lo = std::max(iv.lo, render_margin);
      if (y_negative) iv.hi = std::min(iv.hi, level - render_margin);
      return iv;
    case Direction::DiagPlus:
      iv = {std::max(window.x0, level - window.y1),
            std::min(window.x1, level - window.y0)};
      if (x_positive) iv.lo = std::max(iv.lo, render_margin);
      if (y_negative) iv.lo = std::max(iv.lo, level + render_margin);
      return iv;
  }
  return iv;
}

void append_number(std::string& out, double v, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed,
                           precision);
  out.append(buf, res.ptr);
}

Box padded_bbox(const std::vector<Polyline>& polylines) {
  Box bb{1e300, -1e300, 1e300, -1e300};
  for (const auto& pl : polylines)
    for (const auto& p : pl.points) {
      bb.x0 = std::min(bb.x0, p.s);
      bb.x1 = std::max(bb.x1, p.s);
      bb.y0 = std::min(bb.y0, p.t);
      bb.y1 = std::max(bb.y1, p.t);
    }
  double pad = 0.02 * std::max(bb.x1 - bb.x0, bb.y1 - bb.y0) + 0.01;
  return {bb.x0 - pad, bb.x1 + pad, bb.y0 - pad, bb.y1 + pad};
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i)
    v.push_back(n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1));
  return v;
}

}  // namespace

std::vector<Point> sample_curve(WebId web, Direction dir, double level,
                                const Box& window, double tol) {
  family_of_direction(web, dir);  // rejects DiagPlus on w1/w2
  Interval iv = line_interval(web, dir, level, window);
  if (iv.empty())
    throw EmptyIntersection("chart line misses the window or the domain");
  auto eval = [&](double u) { return forward(web, line_point(dir, level, u)); };
  return adaptive_polyline(eval, iv.lo, iv.hi, tol);
}

SvgScene render_web_lattice(const LatticeSpec& spec) {
  if (!(spec.step > 0.0)) throw OutOfRange("lattice step must be positive");
  if (spec.directions.empty()) throw OutOfRange("no lattice directions requested");
  double tol = 0.25 / spec.px_per_unit;

  SvgScene scene;
  scene.px_per_unit = spec.px_per_unit;
  // Canonical direction order keeps the output deterministic regardless of
  // the order directions were requested in.
  const Direction order[] = {Direction::XConst, Direction::YConst,
                             Direction::DiagMinus, Direction::DiagPlus};
  for (Direction dir : order) {
    if (std::find(spec.directions.begin(), spec.directions.end(), dir) ==
        spec.directions.end())
      continue;
    CurveFamily fam = family_of_direction(spec.web, dir);
    double base = 0.0, lo = 0.0, hi = 0.0;
    switch (dir) {
      case Direction::XConst:
        base = spec.shift_x; lo = spec.window.x0; hi = spec.window.x1; break;
      case Direction::YConst:
        base = spec.shift_y; lo = spec.window.y0; hi = spec.window.y1; break;
      case Direction::DiagMinus:
        base = spec.shift_x - spec.shift_y;
        lo = spec.window.x0 - spec.window.y1;
        hi = spec.window.x1 - spec.window.y0;
        break;
      case Direction::DiagPlus:
        base = spec.shift_x + spec.shift_y;
        lo = spec.window.x0 + spec.window.y0;
        hi = spec.window.x1 + spec.window.y1;
        break;
    }
    long long i_lo = static_cast<long long>(std::ceil((lo - base) / spec.step - 1e-12));
    long long i_hi = static_cast<long long>(std::floor((hi - base) / spec.step + 1e-12));
    for (long long i = i_lo; i <= i_hi; ++i) {
      double level = base + static_cast<double>(i) * spec.step;
      try {
        auto pts = sample_curve(spec.web, dir, level, spec.window, tol);
        if (pts.size() >= 2) scene.polylines.push_back({fam, std::move(pts)});
      } catch (const EmptyIntersection&) {
        // lattice line misses Omega within the window
      }
    }
  }
  if (scene.polylines.empty())
    throw EmptyIntersection("no lattice line meets the window");
  scene.viewport = padded_bbox(scene.polylines);
  return scene;
}

SvgScene render_tangency_figure(double k1, int members) {
  if (members < 1) throw OutOfRange("at least one pencil member is required");
  ScalingPair pair = scaling_pair(k1);  // certified; throws InvalidScale
  double tol = 0.25 / 100.0;

  std::vector<std::pair<CurveFamily, Circle>> circles;
  if (k1 < 1.0) {
    // Hyperbolic members chosen so center + radius stays in frame.
    std::vector<double> mus;
    for (int i = 0; i < members; ++i)
      mus.push_back(members == 1
                        ? 2.0
                        : 1.4 * std::pow(6.0 / 1.4,
                                         static_cast<double>(i) / (members - 1)));
    for (double mu : mus)
      circles.push_back({CurveFamily::HyperbolicApollonian,
                         scaled_circle({Pencil::Hyperbolic, mu}, pair)});
  }
  for (double d : linspace(-2.5, 2.5, members))
    circles.push_back({CurveFamily::EllipticApollonian,
                       scaled_circle({Pencil::Elliptic, d}, pair)});

  for (const auto& [fam, c] : circles)
    if (!(tangency_residual(c, pair.conic) < 1e-9))
      throw NoTangentConic("rendered circle failed the tangency certificate");

  SvgScene scene;
  scene.px_per_unit = 100.0;
  std::vector<Polyline> circle_polylines;
  for (const auto& [fam, c] : circles) {
    auto eval = [&c](double u) -> Point {
      return {c.center.s + c.radius * std::cos(u),
              c.center.t + c.radius * std::sin(u)};
    };
    circle_polylines.push_back(
        {fam, adaptive_polyline(eval, 0.0, 2.0 * std::acos(-1.0), tol)});
  }
  scene.viewport = padded_bbox(circle_polylines);

  // Conic first (drawn under the circles), sampled inside the viewport.
  if (const auto* hy = std::get_if<ConfocalHyperbola>(&pair.conic)) {
    double a = hy->semi_transverse, b = hy->semi_conjugate;
    double xm = std::max(std::abs(scene.viewport.x0), std::abs(scene.viewport.x1));
    double ym = std::max(std::abs(scene.viewport.y0), std::abs(scene.viewport.y1));
    double u_max = std::min(xm > a ? std::acosh(xm / a) : 0.0,
                            std::asinh(ym / b));
    if (u_max > 0.0) {
      for (double sign : {1.0, -1.0}) {
        auto eval = [&](double u) -> Point {
          return {sign * a * std::cosh(u), b * std::sinh(u)};
        };
        scene.polylines.push_back(
            {CurveFamily::ConfocalHyperbola,
             adaptive_polyline(eval, -u_max, u_max, tol)});
      }
    }
  } else {
    const auto& el = std::get<ConfocalEllipse>(pair.conic);
    auto eval = [&el](double u) { return curve_point(CurveDescriptor{el}, u); };
    scene.polylines.push_back({CurveFamily::ConfocalEllipse,
                               adaptive_polyline(eval, 0.0, 2.0 * std::acos(-1.0), tol)});
  }
  for (auto& pl : circle_polylines) scene.polylines.push_back(std::move(pl));
  return scene;
}

LatticeSpec preset_lattice(WebId web) {
  LatticeSpec spec;
  spec.web = web;
  switch (web) {
    case WebId::CircCircHyperbola:
      spec.directions = {Direction::XConst, Direction::YConst,
                         Direction::DiagMinus};
      spec.window = {0.05, 3.5, -3.5, 3.5};
      spec.px_per_unit = 300.0;
      break;
    case WebId::CircCircEllipse:
      spec.directions = {Direction::XConst, Direction::YConst,
                         Direction::DiagMinus};
      spec.window = {0.05, 3.5, -3.5, -0.05};
      spec.px_per_unit = 700.0;
      break;
    case WebId::ConicsHyperbolicPencil:
      // The lattice shift squeezes five ellipse and five hyperbola levels
      // into a window whose largest ellipse still fits a compact frame.
      spec.directions = {Direction::XConst, Direction::YConst,
                         Direction::DiagMinus, Direction::DiagPlus};
      spec.window = {0.05, 2.9, -2.9, -0.05};
      spec.shift_x = 0.1;
      spec.shift_y = -0.1;
      spec.px_per_unit = 50.0;
      break;
    case WebId::ConicsEllipticPencil:
      spec.directions = {Direction::XConst, Direction::YConst,
                         Direction::DiagMinus, Direction::DiagPlus};
      spec.window = {-3.6, 3.6, -3.6, -0.05};
      spec.px_per_unit = 150.0;
      break;
  }
  return spec;
}

std::string to_svg(const SvgScene& scene) {
  const Box& v = scene.viewport;
  double width = (v.x1 - v.x0) * scene.px_per_unit;
  double height = (v.y1 - v.y0) * scene.px_per_unit;

  std::string svg;
  svg.reserve(1 << 16);
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  append_number(svg, width, 2);
  svg += "\" height=\"";
  append_number(svg, height, 2);
  svg += "\" viewBox=\"0 0 ";
  append_number(svg, width, 2);
  svg += " ";
  append_number(svg, height, 2);
  svg += "\">\n<style>\n"
         "polyline { fill: none; stroke-width: 1.2; stroke-linecap: round; }\n"
         ".hyperbolic-apollonian { stroke: #1f77b4; }\n"
         ".elliptic-apollonian { stroke: #d62728; }\n"
         ".confocal-ellipse { stroke: #2ca02c; }\n"
         ".confocal-hyperbola { stroke: #9467bd; }\n"
         ".vertical-line { stroke: #8c564b; }\n"
         ".horizontal-line { stroke: #e377c2; }\n"
         "</style>\n";
  for (const auto& pl : scene.polylines) {
    svg += "<polyline class=\"";
    svg += family_name(pl.family);
    svg += "\" points=\"";
    bool first = true;
    for (const auto& p : pl.points) {
      if (!first) svg += " ";
      first = false;
      append_number(svg, (p.s - v.x0) * scene.px_per_unit, 4);
      svg += ",";
      append_number(svg, (v.y1 - p.t) * scene.px_per_unit, 4);  // y flip
    }
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void write_svg(const SvgScene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutOfRange("cannot open output file " + path);
  out << to_svg(scene);
}

}  // namespace webs

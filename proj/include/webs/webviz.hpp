#pragma once

#include <string>
#include <vector>

#include "webs/pencils_tangency.hpp"
#include "webs/web_maps.hpp"

// Deterministic SVG rendering: lattice images of the four webs (one curve
// per lattice line of the chart window) and the scaled-pencil tangency
// figures. Identical specs produce byte-identical documents.

namespace webs {

struct LatticeSpec {
  WebId web;
  double step = 0.6931471805599453;  // lattice spacing, ln 2 by default
  double shift_x = 0.0;              // lattice translation
  double shift_y = 0.0;
  std::vector<Direction> directions;
  Box window;                        // chart-space
  double px_per_unit = 100.0;
};

struct Polyline {
  CurveFamily family;
  std::vector<Point> points;
};

struct SvgScene {
  Box viewport;  // plane-space
  double px_per_unit = 100.0;
  std::vector<Polyline> polylines;
};

// Adaptive polyline of the forward image of the chart line
// {direction = level} restricted to Omega and the window; subdivision stops
// once the chord-to-curve deviation drops below `tol` plane units (0.25 px
// at the default scale), depth-capped at 24. Throws EmptyIntersection when
// the line misses Omega or the window, UnsupportedDirection for DiagPlus on
// w1/w2.
std::vector<Point> sample_curve(WebId web, Direction dir, double level,
                                const Box& window, double tol = 0.0025);

// One polyline per lattice line per requested direction, tagged with
// family_of_direction and ordered by (direction, level). The viewport is
// the padded bounding box of the image.
SvgScene render_web_lattice(const LatticeSpec& spec);

// The fixed conic of scaling_pair(k1) plus `members` scaled circles from
// each applicable pencil (both pencils in mode A, the elliptic pencil in
// mode B). Every rendered circle is re-certified against the conic.
SvgScene render_tangency_figure(double k1, int members);

// Figure preset per web: step ln 2, window showing at least five curves of
// every family. The window choices are aesthetic.
LatticeSpec preset_lattice(WebId web);

std::string to_svg(const SvgScene& scene);
void write_svg(const SvgScene& scene, const std::string& path);

}  // namespace webs

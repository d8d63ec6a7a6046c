#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "webs/focal_geometry.hpp"

// The four diffeomorphisms from a chart domain Omega onto the open positive
// quadrant. Each map sends the lines x = const, y = const and x - y = const
// (plus x + y = const for the conic webs) onto the three (or four) curve
// families of its web:
//
//   w1  elliptic + hyperbolic Apollonian circles + confocal hyperbolas
//   w2  elliptic + hyperbolic Apollonian circles + confocal ellipses
//   w3  confocal ellipses + hyperbolas + hyperbolic pencil (+ vertical lines)
//   w4  confocal ellipses + hyperbolas + elliptic pencil (+ horizontal lines)

namespace webs {

enum class WebId {
  CircCircHyperbola,    // w1
  CircCircEllipse,      // w2
  ConicsHyperbolicPencil,  // w3
  ConicsEllipticPencil,    // w4
};

inline constexpr std::array<WebId, 4> all_webs = {
    WebId::CircCircHyperbola, WebId::CircCircEllipse,
    WebId::ConicsHyperbolicPencil, WebId::ConicsEllipticPencil};

const char* web_name(WebId web);                       // "w1".."w4"
std::optional<WebId> parse_web(std::string_view name);

struct WebCoords {
  double x = 0.0;
  double y = 0.0;
};

enum class Direction { XConst, YConst, DiagMinus, DiagPlus };

// Chart domains:
//   w1: x > 0            w2: x > 0, y < 0        w3: x > 0, y < 0
//   w4: y < 0 (corrected half-plane; surjectivity onto the quadrant needs
//       x < 0 for image points with e < 2*sqrt(2))
// The quadrant variant of w4 remains selectable for comparison.
enum class W4Domain { CorrectedHalfPlane, Quadrant };

// Domain predicates treat coordinates within 1e-12 of the boundary as
// outside.
inline constexpr double domain_margin = 1e-12;

bool domain_contains(WebId web, WebCoords c,
                     W4Domain mode = W4Domain::CorrectedHalfPlane);

// Signed distance from c to the boundary of Omega (positive inside).
double boundary_margin(WebId web, WebCoords c);

// Chart point -> plane point. Throws OutsideDomain.
Point forward(WebId web, WebCoords c);

// Closed-form inverse; throws OutsideQuadrant (via measures).
WebCoords inverse(WebId web, Point p);

// Central finite-difference Jacobian of forward, step 1e-6 * max(1, |coord|).
// Requires boundary_margin >= 1e-5 (BoundaryTooClose) inside the open domain
// (OutsideDomain).
std::array<std::array<double, 2>, 2> jacobian(WebId web, WebCoords c);
double jacobian_determinant(WebId web, WebCoords c);

// Which curve family the images of {direction = const} lines belong to.
// DiagPlus exists only for w3 (vertical lines) and w4 (horizontal lines);
// elsewhere it throws UnsupportedDirection.
CurveFamily family_of_direction(WebId web, Direction dir);

// The measures of forward(web, c) in closed form. These are the level-set
// laws the maps were built from, so each entry depends only on x, only on y,
// or only on x - y:
//   w1: g = 1 - 2e^-x,  f = f(y),        h = 2 sqrt(q/(q+1)), q = e^(x-y)
//   w2: g = 2e^-x - 1,  f = f(y),        e = 2 sqrt(q/(q-1))
//   w3: e = 2e^x,       h = 2e^y,        f = coth((x-y)/2)
//   w4: e = 2 sqrt(1+e^x), h = 2 sqrt(1-e^y), g = tanh((x-y)/2)
// The remaining measures follow from the identities f = (e+h)/(e-h) and
// g = (e^2 + h^2 - 8)/(e^2 - h^2).
struct ChartMeasures {
  double f;
  double g;
  double h;
  double e;
};

ChartMeasures chart_measures(WebId web, WebCoords c);

// Axis-aligned box, used for chart-space windows and plane-space viewports.
struct Box {
  double x0, x1, y0, y1;
};

// Bounded interior region of Omega used by the randomized verification
// sweeps; comfortably clear of every guard band.
Box chart_sample_box(WebId web);

}  // namespace webs

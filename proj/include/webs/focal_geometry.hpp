#pragma once

#include <utility>
#include <variant>

#include "webs/errors.hpp"

// Focal geometry with respect to the fixed foci F1 = (-1, 0), F2 = (1, 0):
// the distances a, b, the derived coordinates f = a/b, g = cos(F1 P F2),
// h = a - b, e = a + b, and the level-set curves of each coordinate.

namespace webs {

// Foci of every pencil and conic family in this library.
inline constexpr double focus1_x = -1.0;
inline constexpr double focus2_x = 1.0;

// Inputs closer than this to a focus or to a coordinate axis are rejected by
// operations whose downstream formulas divide by a vanishing quantity.
inline constexpr double guard_band = 1e-6;

struct Point {
  double s = 0.0;  // abscissa
  double t = 0.0;  // ordinate
};

double distance(Point p, Point q);

// Bundle of focal distances and derived coordinates at one point.
// In the open positive quadrant: f > 1, -1 < g < 1, 0 < h < 2, e > 2.
struct FocalMeasures {
  double a;  // distance to F1
  double b;  // distance to F2
  double f;  // a / b
  double g;  // cos of the angle F1 P F2
  double h;  // a - b
  double e;  // a + b
};

// ---------------------------------------------------------------------------
// Level-set curve descriptors.

// Locus |XF1| / |XF2| = mu. Center on the x-axis, never contains a focus.
struct HyperbolicApollonian {
  double center_x;
  double radius;
};

// Circle through both foci; center on the y-axis, radius^2 = center_y^2 + 1.
// The positive-quadrant level set of g is the arc with t > 0.
struct EllipticApollonian {
  double center_y;
  double radius;
};

// s^2/A^2 + t^2/B^2 = 1 with A^2 - B^2 = 1 (confocal with (+-1, 0)).
struct ConfocalEllipse {
  double semi_major;  // A = e/2 > 1
  double semi_minor;  // B = sqrt(A^2 - 1)
};

// s^2/A^2 - t^2/B^2 = 1 with A^2 + B^2 = 1; the h-level set is the right
// branch (h > 0 in the positive quadrant).
struct ConfocalHyperbola {
  double semi_transverse;  // A = h/2 in (0, 1)
  double semi_conjugate;   // B = sqrt(1 - A^2)
};

struct VerticalLine {
  double abscissa;
};

struct HorizontalLine {
  double ordinate;
};

using CurveDescriptor = std::variant<HyperbolicApollonian, EllipticApollonian,
                                     ConfocalEllipse, ConfocalHyperbola,
                                     VerticalLine, HorizontalLine>;

enum class CurveFamily {
  HyperbolicApollonian,
  EllipticApollonian,
  ConfocalEllipse,
  ConfocalHyperbola,
  VerticalLine,
  HorizontalLine,
};

CurveFamily family(const CurveDescriptor& c);

// Stable kebab-case tag ("hyperbolic-apollonian", ...) used for SVG classes.
const char* family_name(CurveFamily f);

enum class Axis { Horizontal, Vertical, Both };

// ---------------------------------------------------------------------------
// Operations.

// Distances (a, b) from p to F1 and F2. Defined on the whole plane; throws
// FocusCoincidence within the guard band of either focus.
std::pair<double, double> focal_distances(Point p);

// All six measures at a point of the open positive quadrant.
// Throws OutsideQuadrant for s <= 0, t <= 0, or inside the axis guard band.
FocalMeasures measures(Point p);

// The unique positive-quadrant point with the given e = a + b, h = a - b:
// s = e*h/4, t^2 = (e^2 - 4)(4 - h^2)/16; the factored radicand keeps the
// boundary cases well conditioned. Requires e > 2 and 0 < h < 2
// (OutOfRange); throws DegenerateTarget when the target collapses onto the
// quadrant boundary.
Point point_from_eh(double e, double h);

// Reflection across the horizontal axis (t -> -t), the vertical axis
// (s -> -s), or both.
Point reflect(Point p, Axis axis);

// Canonical descriptor of the unique family member through p.
CurveDescriptor curve_through(Point p, CurveFamily fam);

// Implicit-equation residual normalized by the gradient magnitude at p;
// approximately the geometric distance from p to the curve.
double residual(const CurveDescriptor& c, Point p);

// Canonical parametrization: circles and the ellipse by angle, the hyperbola
// (right branch) by the hyperbolic angle, lines by arclength.
Point curve_point(const CurveDescriptor& c, double u);

}  // namespace webs

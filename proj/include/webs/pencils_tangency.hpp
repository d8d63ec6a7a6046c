#pragma once

#include <optional>

#include "webs/focal_geometry.hpp"

// Scaling every elliptic Apollonian circle by k1 and every hyperbolic
// Apollonian circle by k2 about its own center makes the scaled circles
// tangent to one fixed confocal conic:
//   k1 < 1, k1^2 + k2^2 = 1  ->  hyperbola A = k1, B = k2   (mode A)
//   k1 > 1                   ->  ellipse   A = k1           (mode B)
// Tangency is certified algebraically: substituting the conic into the
// circle equation leaves a quadratic whose discriminant vanishes exactly at
// tangency, including tangency at complex points.

namespace webs {

enum class Pencil { Hyperbolic, Elliptic };

// Hyperbolic members are indexed by the distance ratio mu (mu != 1, the
// degenerate member is the y-axis); elliptic members by the center ordinate.
struct PencilParam {
  Pencil pencil;
  double value;
};

struct Circle {
  Point center;
  double radius;
};

// The fixed conic for a scaling (k1, k2), together with the factors.
// Mode A stores k2 = sqrt(1 - k1^2); mode B leaves k2 = 0 (unused).
struct ScalingPair {
  double k1;
  double k2;
  CurveDescriptor conic;
};

// Canonical circle of one pencil member.
//   hyperbolic mu: center ((mu^2+1)/(mu^2-1), 0), radius |2 mu/(mu^2-1)|;
//     mu in (0,1) gives the mirror member left of the y-axis.
//   elliptic d:    center (0, d), radius sqrt(1 + d^2).
// Throws DegeneratePencilMember for mu <= 0 or mu within the guard band
// of 1.
Circle apollonian_circle(PencilParam p);

// Scale about the center; k must be positive.
Circle scale_circle(const Circle& c, double k);

// The member circle scaled by the pair's factor for its pencil. A mode-B
// pair has no factor for hyperbolic members (InvalidScale).
Circle scaled_circle(PencilParam p, const ScalingPair& pair);

// Result of the discriminant test. `root` is the double-root coordinate
// (x for circles centered on the x-axis, y for the y-axis) and
// `partner_square` the squared other coordinate of the touching point;
// negative means the circles touch the conic at a complex point.
struct TangencyCertificate {
  double residual;        // |discriminant| / leading_coefficient^2
  double root;
  double partner_square;
  bool real_touch;
};

// Requires a confocal conic and a circle centered on one of its symmetry
// axes (AxisMismatch beyond 1e-12 off-axis).
TangencyCertificate tangency_certificate(const Circle& circle,
                                         const CurveDescriptor& conic);
double tangency_residual(const Circle& circle, const CurveDescriptor& conic);

// Builds the pair and certifies the conic against a 100-member sweep of the
// applicable pencils before returning (NoTangentConic on failure). k2, when
// given in mode A, must satisfy k1^2 + k2^2 = 1; InvalidScale for k1 <= 0 or
// k1 = 1.
ScalingPair scaling_pair(double k1, std::optional<double> k2 = std::nullopt);
CurveDescriptor tangent_conic_for_scaling(double k1,
                                          std::optional<double> k2 = std::nullopt);

}  // namespace webs

#include "webs/focal_geometry.hpp"

#include <cmath>
#include <string>

namespace webs {

namespace {

std::string point_str(Point p) {
  return "(" + std::to_string(p.s) + ", " + std::to_string(p.t) + ")";
}

}  // namespace

double distance(Point p, Point q) { return std::hypot(p.s - q.s, p.t - q.t); }

CurveFamily family(const CurveDescriptor& c) {
  return static_cast<CurveFamily>(c.index());
}

const char* family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::HyperbolicApollonian: return "hyperbolic-apollonian";
    case CurveFamily::EllipticApollonian: return "elliptic-apollonian";
    case CurveFamily::ConfocalEllipse: return "confocal-ellipse";
    case CurveFamily::ConfocalHyperbola: return "confocal-hyperbola";
    case CurveFamily::VerticalLine: return "vertical-line";
    case CurveFamily::HorizontalLine: return "horizontal-line";
  }
  return "unknown";
}

std::pair<double, double> focal_distances(Point p) {
  double a = std::hypot(p.s - focus1_x, p.t);
  double b = std::hypot(p.s - focus2_x, p.t);
  if (a < guard_band || b < guard_band)
    throw FocusCoincidence("point " + point_str(p) + " coincides with a focus");
  return {a, b};
}

FocalMeasures measures(Point p) {
  if (!(p.s > 0.0) || !(p.t > 0.0))
    throw OutsideQuadrant("point " + point_str(p) +
                          " is not in the open positive quadrant");
  if (p.s < guard_band || p.t < guard_band)
    throw OutsideQuadrant("point " + point_str(p) +
                          " is inside the axis guard band");
  auto [a, b] = focal_distances(p);
  return FocalMeasures{a,
                       b,
                       a / b,
                       (a * a + b * b - 4.0) / (2.0 * a * b),
                       a - b,
                       a + b};
}

Point point_from_eh(double e, double h) {
  if (!(e > 2.0) || !(h > 0.0) || !(h < 2.0))
    throw OutOfRange("point_from_eh requires e > 2 and 0 < h < 2, got e = " +
                     std::to_string(e) + ", h = " + std::to_string(h));
  double s = e * h / 4.0;
  // t^2 = ((e+h)/2)^2 - (s+1)^2 factors as (e^2 - 4)(4 - h^2)/16.
  double radicand = (e - 2.0) * (e + 2.0) * (2.0 - h) * (2.0 + h) / 16.0;
  if (!(radicand > 0.0))
    throw DegenerateTarget("(e, h) target collapses onto the segment between the foci");
  Point p{s, std::sqrt(radicand)};
  if (p.s < guard_band || p.t < guard_band)
    throw DegenerateTarget("(e, h) target lies on the quadrant boundary");
  return p;
}

Point reflect(Point p, Axis axis) {
  switch (axis) {
    case Axis::Horizontal: return {p.s, -p.t};
    case Axis::Vertical: return {-p.s, p.t};
    case Axis::Both: return {-p.s, -p.t};
  }
  return p;
}

CurveDescriptor curve_through(Point p, CurveFamily fam) {
  FocalMeasures m = measures(p);
  switch (fam) {
    case CurveFamily::HyperbolicApollonian: {
      // Same circle as center (mu^2+1)/(mu^2-1), radius 2 mu/(mu^2-1) for
      // mu = f, evaluated through the power of the point: the mu form loses
      // up to 1/(mu-1)^2 digits as the ratio approaches 1.
      double cx = (p.s * p.s + p.t * p.t + 1.0) / (2.0 * p.s);
      return HyperbolicApollonian{cx, m.a * m.b / (2.0 * p.s)};
    }
    case CurveFamily::EllipticApollonian: {
      // Circumcenter of p and the two foci; identical to center
      // g/sqrt(1-g^2), radius 1/sqrt(1-g^2) but conditioned in g -> +-1.
      double cy = (p.s * p.s + p.t * p.t - 1.0) / (2.0 * p.t);
      return EllipticApollonian{cy, std::hypot(1.0, cy)};
    }
    case CurveFamily::ConfocalEllipse: {
      double a = m.e / 2.0;
      return ConfocalEllipse{a, std::sqrt((a - 1.0) * (a + 1.0))};
    }
    case CurveFamily::ConfocalHyperbola: {
      // A = h/2 = 2s/e; 1 - A = (e - 2s)/e with e - 2s expanded through
      // difference-of-squares so nothing cancels for points far out near
      // the x-axis (h -> 2).
      double a = 2.0 * p.s / m.e;
      double e_minus_2s = p.t * p.t * (1.0 / (m.a + p.s + 1.0) +
                                       1.0 / (m.b + p.s - 1.0));
      double one_minus_a = e_minus_2s / m.e;
      return ConfocalHyperbola{a, std::sqrt(one_minus_a * (1.0 + a))};
    }
    case CurveFamily::VerticalLine: return VerticalLine{p.s};
    case CurveFamily::HorizontalLine: return HorizontalLine{p.t};
  }
  throw OutOfRange("unknown curve family");
}

namespace {

// |F|/|grad F| for a circle, F = |p - center|^2 - r^2, grouped as
// (d - r)(d + r)/(2d) so nothing cancels when p sits on a large circle.
double circle_residual(Point p, Point center, double r) {
  double d = distance(p, center);
  return std::abs(d - r) * (d + r) / std::max(2.0 * d, 1e-12);
}

}  // namespace

double residual(const CurveDescriptor& c, Point p) {
  // |F(p)| / |grad F(p)| for the canonical implicit form F.
  double value = 0.0, gs = 0.0, gt = 0.0;
  if (const auto* hc = std::get_if<HyperbolicApollonian>(&c)) {
    return circle_residual(p, {hc->center_x, 0.0}, hc->radius);
  } else if (const auto* ec = std::get_if<EllipticApollonian>(&c)) {
    return circle_residual(p, {0.0, ec->center_y}, ec->radius);
  } else if (const auto* el = std::get_if<ConfocalEllipse>(&c)) {
    double a2 = el->semi_major * el->semi_major;
    double b2 = el->semi_minor * el->semi_minor;
    value = p.s * p.s / a2 + p.t * p.t / b2 - 1.0;
    gs = 2.0 * p.s / a2;
    gt = 2.0 * p.t / b2;
  } else if (const auto* hy = std::get_if<ConfocalHyperbola>(&c)) {
    double a2 = hy->semi_transverse * hy->semi_transverse;
    double b2 = hy->semi_conjugate * hy->semi_conjugate;
    value = p.s * p.s / a2 - p.t * p.t / b2 - 1.0;
    gs = 2.0 * p.s / a2;
    gt = -2.0 * p.t / b2;
  } else if (const auto* vl = std::get_if<VerticalLine>(&c)) {
    return std::abs(p.s - vl->abscissa);
  } else if (const auto* hl = std::get_if<HorizontalLine>(&c)) {
    return std::abs(p.t - hl->ordinate);
  }
  double grad = std::hypot(gs, gt);
  return std::abs(value) / std::max(grad, 1e-12);
}

Point curve_point(const CurveDescriptor& c, double u) {
  if (const auto* hc = std::get_if<HyperbolicApollonian>(&c))
    return {hc->center_x + hc->radius * std::cos(u), hc->radius * std::sin(u)};
  if (const auto* ec = std::get_if<EllipticApollonian>(&c))
    return {ec->radius * std::cos(u), ec->center_y + ec->radius * std::sin(u)};
  if (const auto* el = std::get_if<ConfocalEllipse>(&c))
    return {el->semi_major * std::cos(u), el->semi_minor * std::sin(u)};
  if (const auto* hy = std::get_if<ConfocalHyperbola>(&c))
    return {hy->semi_transverse * std::cosh(u), hy->semi_conjugate * std::sinh(u)};
  if (const auto* vl = std::get_if<VerticalLine>(&c)) return {vl->abscissa, u};
  const auto& hl = std::get<HorizontalLine>(c);
  return {u, hl.ordinate};
}

}  // namespace webs

#include "webs/web_maps.hpp"

#include <cmath>
#include <string>

namespace webs {

namespace {

constexpr double jacobian_margin = 1e-5;
constexpr double jacobian_step = 1e-6;

std::string coords_str(WebCoords c) {
  return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")";
}

}  // namespace

const char* web_name(WebId web) {
  switch (web) {
    case WebId::CircCircHyperbola: return "w1";
    case WebId::CircCircEllipse: return "w2";
    case WebId::ConicsHyperbolicPencil: return "w3";
    case WebId::ConicsEllipticPencil: return "w4";
  }
  return "?";
}

std::optional<WebId> parse_web(std::string_view name) {
  for (WebId web : all_webs)
    if (name == web_name(web)) return web;
  return std::nullopt;
}

double boundary_margin(WebId web, WebCoords c) {
  switch (web) {
    case WebId::CircCircHyperbola: return c.x;
    case WebId::CircCircEllipse:
    case WebId::ConicsHyperbolicPencil: return std::min(c.x, -c.y);
    case WebId::ConicsEllipticPencil: return -c.y;
  }
  return 0.0;
}

bool domain_contains(WebId web, WebCoords c, W4Domain mode) {
  if (web == WebId::ConicsEllipticPencil && mode == W4Domain::Quadrant)
    return c.x > domain_margin && -c.y > domain_margin;
  return boundary_margin(web, c) > domain_margin;
}

Point forward(WebId web, WebCoords c) {
  if (!domain_contains(web, c))
    throw OutsideDomain("chart point " + coords_str(c) + " is outside the " +
                        web_name(web) + " domain");
  double ex = std::exp(c.x);
  double ey = std::exp(c.y);
  switch (web) {
    case WebId::CircCircHyperbola: {
      double den = ex + ey;
      return {ex * std::sqrt(1.0 + ey) / den, ey * std::sqrt(ex - 1.0) / den};
    }
    case WebId::CircCircEllipse: {
      double den = ex - ey;
      return {ex * std::sqrt(1.0 - ey) / den, ey * std::sqrt(ex - 1.0) / den};
    }
    case WebId::ConicsHyperbolicPencil:
      return {ex * ey, std::sqrt((ex * ex - 1.0) * (1.0 - ey * ey))};
    case WebId::ConicsEllipticPencil:
      return {std::sqrt((1.0 + ex) * (1.0 - ey)), std::sqrt(ex * ey)};
  }
  throw OutsideDomain("unknown web");
}

WebCoords inverse(WebId web, Point p) {
  FocalMeasures m = measures(p);
  switch (web) {
    case WebId::CircCircHyperbola: {
      // g = 1 - 2e^-x; (f+1)/(f-1) = e/h gives e^y = (e/h)^2 - 1.
      double r = m.e / m.h;
      return {std::log(2.0 / (1.0 - m.g)), std::log(r * r - 1.0)};
    }
    case WebId::CircCircEllipse: {
      // g = 2e^-x - 1; (f-1)/(f+1) = h/e gives e^y = 1 - (h/e)^2.
      double r = m.h / m.e;
      return {std::log(2.0 / (1.0 + m.g)), std::log(1.0 - r * r)};
    }
    case WebId::ConicsHyperbolicPencil:
      return {std::log(m.e / 2.0), std::log(m.h / 2.0)};
    case WebId::ConicsEllipticPencil: {
      double q = m.e / 2.0;
      double w = m.h / 2.0;
      return {std::log((q - 1.0) * (q + 1.0)), std::log((1.0 - w) * (1.0 + w))};
    }
  }
  throw OutsideDomain("unknown web");
}

std::array<std::array<double, 2>, 2> jacobian(WebId web, WebCoords c) {
  double margin = boundary_margin(web, c);
  if (web == WebId::ConicsEllipticPencil)
    margin = -c.y;  // x is unconstrained
  if (!(margin > 0.0))
    throw OutsideDomain("chart point " + coords_str(c) + " is outside the " +
                        web_name(web) + " domain");
  if (margin < jacobian_margin)
    throw BoundaryTooClose("chart point " + coords_str(c) +
                           " is closer than 1e-5 to the domain boundary");
  double hx = jacobian_step * std::max(1.0, std::abs(c.x));
  double hy = jacobian_step * std::max(1.0, std::abs(c.y));
  Point xp = forward(web, {c.x + hx, c.y});
  Point xm = forward(web, {c.x - hx, c.y});
  Point yp = forward(web, {c.x, c.y + hy});
  Point ym = forward(web, {c.x, c.y - hy});
  return {{{(xp.s - xm.s) / (2.0 * hx), (yp.s - ym.s) / (2.0 * hy)},
           {(xp.t - xm.t) / (2.0 * hx), (yp.t - ym.t) / (2.0 * hy)}}};
}

double jacobian_determinant(WebId web, WebCoords c) {
  auto j = jacobian(web, c);
  return j[0][0] * j[1][1] - j[0][1] * j[1][0];
}

CurveFamily family_of_direction(WebId web, Direction dir) {
  switch (web) {
    case WebId::CircCircHyperbola:
      switch (dir) {
        case Direction::XConst: return CurveFamily::EllipticApollonian;
        case Direction::YConst: return CurveFamily::HyperbolicApollonian;
        case Direction::DiagMinus: return CurveFamily::ConfocalHyperbola;
        case Direction::DiagPlus: break;
      }
      break;
    case WebId::CircCircEllipse:
      switch (dir) {
        case Direction::XConst: return CurveFamily::EllipticApollonian;
        case Direction::YConst: return CurveFamily::HyperbolicApollonian;
        case Direction::DiagMinus: return CurveFamily::ConfocalEllipse;
        case Direction::DiagPlus: break;
      }
      break;
    case WebId::ConicsHyperbolicPencil:
      switch (dir) {
        case Direction::XConst: return CurveFamily::ConfocalEllipse;
        case Direction::YConst: return CurveFamily::ConfocalHyperbola;
        case Direction::DiagMinus: return CurveFamily::HyperbolicApollonian;
        case Direction::DiagPlus: return CurveFamily::VerticalLine;
      }
      break;
    case WebId::ConicsEllipticPencil:
      switch (dir) {
        case Direction::XConst: return CurveFamily::ConfocalEllipse;
        case Direction::YConst: return CurveFamily::ConfocalHyperbola;
        case Direction::DiagMinus: return CurveFamily::EllipticApollonian;
        case Direction::DiagPlus: return CurveFamily::HorizontalLine;
      }
      break;
  }
  throw UnsupportedDirection(std::string("web ") + web_name(web) +
                             " has no diagonal x+y family");
}

ChartMeasures chart_measures(WebId web, WebCoords c) {
  if (!domain_contains(web, c))
    throw OutsideDomain("chart point " + coords_str(c) + " is outside the " +
                        web_name(web) + " domain");
  double ex = std::exp(c.x);
  double ey = std::exp(c.y);
  switch (web) {
    case WebId::CircCircHyperbola: {
      double u = std::sqrt(1.0 + ey);
      double q = std::exp(c.x - c.y);
      double h = 2.0 * std::sqrt(q / (q + 1.0));
      return {(u + 1.0) / (u - 1.0), 1.0 - 2.0 / ex, h, h * u};
    }
    case WebId::CircCircEllipse: {
      double v = std::sqrt(1.0 - ey);
      double q = std::exp(c.x - c.y);
      double e = 2.0 * std::sqrt(q / (q - 1.0));
      return {(1.0 + v) / (1.0 - v), 2.0 / ex - 1.0, e * v, e};
    }
    case WebId::ConicsHyperbolicPencil: {
      double e = 2.0 * ex;
      double h = 2.0 * ey;
      return {1.0 / std::tanh((c.x - c.y) / 2.0),
              (e * e + h * h - 8.0) / ((e - h) * (e + h)), h, e};
    }
    case WebId::ConicsEllipticPencil: {
      double e = 2.0 * std::sqrt(1.0 + ex);
      double h = 2.0 * std::sqrt(1.0 - ey);
      return {(e + h) / (e - h), std::tanh((c.x - c.y) / 2.0), h, e};
    }
  }
  throw OutsideDomain("unknown web");
}

Box chart_sample_box(WebId web) {
  switch (web) {
    case WebId::CircCircHyperbola: return {0.05, 3.5, -3.5, 3.5};
    case WebId::CircCircEllipse: return {0.05, 3.5, -3.5, -0.05};
    case WebId::ConicsHyperbolicPencil: return {0.05, 3.0, -3.0, -0.05};
    case WebId::ConicsEllipticPencil: return {-3.5, 3.0, -3.5, -0.05};
  }
  return {0.0, 1.0, 0.0, 1.0};
}

}  // namespace webs

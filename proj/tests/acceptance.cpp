// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Run directly or through ctest (-R acceptance).

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "webs/rng.hpp"
#include "webs/verification.hpp"
#include "webs/webviz.hpp"

using namespace webs;

namespace {

int failures = 0;

void criterion(int num, const char* name, bool ok, double worst) {
  std::printf("%s criterion %d: %s (worst %.3e)\n", ok ? "PASS" : "FAIL", num,
              name, worst);
  if (!ok) ++failures;
}

double oracle_f(Point p) {
  return std::hypot(p.s + 1.0, p.t) / std::hypot(p.s - 1.0, p.t);
}
double oracle_e(Point p) {
  return std::hypot(p.s + 1.0, p.t) + std::hypot(p.s - 1.0, p.t);
}
double oracle_h(Point p) {
  return std::hypot(p.s + 1.0, p.t) - std::hypot(p.s - 1.0, p.t);
}
double oracle_g(Point p) {
  double a = std::hypot(p.s + 1.0, p.t), b = std::hypot(p.s - 1.0, p.t);
  return (a * a + b * b - 4.0) / (2.0 * a * b);
}

// Local copy of each map with every numeric constant multiplied by k(i), so
// the sensitivity control can nudge one constant at a time.
Point perturbed_forward(WebId web, WebCoords q, int knob, double factor) {
  auto k = [&](int i) { return i == knob ? factor : 1.0; };
  double ex = std::exp(q.x), ey = std::exp(q.y);
  switch (web) {
    case WebId::CircCircHyperbola: {
      double den = ex + ey;
      return {k(0) * ex * std::sqrt(k(1) + ey) / den,
              k(2) * ey * std::sqrt(ex - k(3)) / den};
    }
    case WebId::CircCircEllipse: {
      double den = ex - ey;
      return {k(0) * ex * std::sqrt(k(1) - ey) / den,
              k(2) * ey * std::sqrt(ex - k(3)) / den};
    }
    case WebId::ConicsHyperbolicPencil:
      return {k(0) * ex * ey,
              std::sqrt((k(1) * ex * ex - k(2)) * (k(3) - k(4) * ey * ey))};
    case WebId::ConicsEllipticPencil:
      return {std::sqrt((k(0) + ex) * (k(1) - ey)), k(2) * std::sqrt(ex * ey)};
  }
  return {0.0, 0.0};
}

int knob_count(WebId web) {
  switch (web) {
    case WebId::CircCircHyperbola: return 4;
    case WebId::CircCircEllipse: return 4;
    case WebId::ConicsHyperbolicPencil: return 5;
    case WebId::ConicsEllipticPencil: return 3;
  }
  return 0;
}

// Worst level-set discrepancy of a (possibly perturbed) forward map over
// random same-coordinate chart pairs.
double level_set_discrepancy(WebId web, int n, std::uint64_t seed, int knob,
                             double factor) {
  Rng rng(seed);
  Box box = chart_sample_box(web);
  auto fwd = [&](WebCoords c) { return perturbed_forward(web, c, knob, factor); };
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    WebCoords c{rng.uniform(box.x0, box.x1), rng.uniform(box.y0, box.y1)};
    WebCoords cx{c.x, rng.uniform(box.y0, box.y1)};
    WebCoords cy{rng.uniform(box.x0, box.x1), c.y};
    double dm = rng.uniform(std::max(box.x0 - c.x, box.y0 - c.y),
                            std::min(box.x1 - c.x, box.y1 - c.y));
    WebCoords cd{c.x + dm, c.y + dm};
    double dp = rng.uniform(std::max(box.x0 - c.x, c.y - box.y1),
                            std::min(box.x1 - c.x, c.y - box.y0));
    WebCoords cp{c.x + dp, c.y - dp};
    Point p = fwd(c);
    switch (web) {
      case WebId::CircCircHyperbola:
        worst = std::max({worst, discrepancy(oracle_f(fwd(cy)), oracle_f(p)),
                          discrepancy(oracle_g(fwd(cx)), oracle_g(p)),
                          discrepancy(oracle_h(fwd(cd)), oracle_h(p))});
        break;
      case WebId::CircCircEllipse:
        worst = std::max({worst, discrepancy(oracle_f(fwd(cy)), oracle_f(p)),
                          discrepancy(oracle_g(fwd(cx)), oracle_g(p)),
                          discrepancy(oracle_e(fwd(cd)), oracle_e(p))});
        break;
      case WebId::ConicsHyperbolicPencil:
        worst = std::max({worst, discrepancy(oracle_e(fwd(cx)), oracle_e(p)),
                          discrepancy(oracle_h(fwd(cy)), oracle_h(p)),
                          discrepancy(oracle_f(fwd(cd)), oracle_f(p)),
                          discrepancy(fwd(cp).s, p.s)});
        break;
      case WebId::ConicsEllipticPencil:
        worst = std::max({worst, discrepancy(oracle_e(fwd(cx)), oracle_e(p)),
                          discrepancy(oracle_h(fwd(cy)), oracle_h(p)),
                          discrepancy(oracle_g(fwd(cd)), oracle_g(p)),
                          discrepancy(fwd(cp).t, p.t)});
        break;
    }
  }
  return worst;
}

void criterion1_level_sets() {
  double worst = 0.0;
  bool ok = true;
  for (WebId web : all_webs) {
    VerificationReport r = verify_level_sets(web, 10000, 42);
    worst = std::max(worst, r.max_error);
    ok = ok && r.passed;
  }
  // Sensitivity control: every map constant, nudged by 1e-3, must break at
  // least one level-set law of its web.
  double weakest_response = 1e300;
  for (WebId web : all_webs)
    for (int knob = 0; knob < knob_count(web); ++knob) {
      double err = level_set_discrepancy(web, 300, 42, knob, 1.0 + 1e-3);
      weakest_response = std::min(weakest_response, err);
      ok = ok && err > 1e-9;
    }
  std::printf("       sensitivity: weakest perturbation response %.3e\n",
              weakest_response);
  criterion(1, "level-set constancy with sensitivity control", ok, worst);
}

void criterion2_closed_forms() {
  double worst = 0.0;
  Rng rng(42);
  for (WebId web : all_webs) {
    Box box = chart_sample_box(web);
    for (int i = 0; i < 10000; ++i) {
      WebCoords c{rng.uniform(box.x0, box.x1), rng.uniform(box.y0, box.y1)};
      Point p = forward(web, c);
      FocalMeasures m = measures(p);
      double q = std::exp(c.x - c.y);
      switch (web) {
        case WebId::CircCircHyperbola:
          worst = std::max({worst,
                            discrepancy(m.g, 1.0 - 2.0 * std::exp(-c.x)),
                            discrepancy(m.h, 2.0 * std::sqrt(q / (q + 1.0)))});
          break;
        case WebId::CircCircEllipse:
          worst = std::max({worst,
                            discrepancy(m.g, 2.0 * std::exp(-c.x) - 1.0),
                            discrepancy(m.e, 2.0 * std::sqrt(q / (q - 1.0)))});
          break;
        case WebId::ConicsHyperbolicPencil:
          worst = std::max({worst, discrepancy(m.e, 2.0 * std::exp(c.x)),
                            discrepancy(m.h, 2.0 * std::exp(c.y)),
                            discrepancy(m.f, 1.0 / std::tanh((c.x - c.y) / 2.0))});
          break;
        case WebId::ConicsEllipticPencil:
          worst = std::max({worst,
                            discrepancy(m.e, 2.0 * std::sqrt(1.0 + std::exp(c.x))),
                            discrepancy(m.h, 2.0 * std::sqrt(1.0 - std::exp(c.y))),
                            discrepancy(m.g, std::tanh((c.x - c.y) / 2.0))});
          break;
      }
    }
  }
  criterion(2, "closed-form measure agreement", worst < 1e-9, worst);
}

void criterion3_roundtrip() {
  double worst = 0.0;
  bool ok = true;
  for (WebId web : all_webs) {
    VerificationReport r = verify_roundtrip(web, 10000, 42);
    worst = std::max(worst, r.max_error);
    ok = ok && r.passed;
  }
  // Points with e < 2 sqrt 2 exercise the corrected w4 half-plane (x < 0).
  bool negative_x_seen = false;
  for (int i = 0; i < 200; ++i) {
    double e = 2.02 + (2.82 - 2.02) * i / 199.0;
    Point p = point_from_eh(e, 1.0);
    for (WebId web : all_webs) {
      Point q = forward(web, inverse(web, p));
      worst = std::max({worst, std::abs(q.s - p.s), std::abs(q.t - p.t)});
    }
    if (inverse(WebId::ConicsEllipticPencil, p).x < 0.0) negative_x_seen = true;
  }
  ok = ok && worst < 1e-9 && negative_x_seen;
  criterion(3, "surjectivity roundtrips incl. small-e region", ok, worst);
}

void criterion4_jacobian() {
  double worst = 0.0;
  bool ok = true;
  for (WebId web : all_webs) {
    VerificationReport r = verify_jacobian(web, 1000, 3);
    worst = std::max(worst, r.max_error);
    ok = ok && r.passed;
  }
  criterion(4, "jacobian nondegeneracy and sign constancy", ok, worst);
}

void criterion5_hexagons() {
  double worst = 0.0;
  bool ok = true;
  for (WebId web : all_webs) {
    VerificationReport r = verify_hexagon_sweep(web, 100, 2024);
    worst = std::max(worst, r.max_error);
    ok = ok && r.passed;
  }
  criterion(5, "Thomsen hexagon closure", ok, worst);
}

void criterion6_tangency() {
  double worst = 0.0;
  bool ok = true;
  for (double k1 : {0.3, 1.0 / std::sqrt(2.0), 0.9, 1.1, std::sqrt(2.0), 3.0}) {
    VerificationReport r = verify_tangency_sweep(k1, 100);
    worst = std::max(worst, r.max_error);
    ok = ok && r.passed;
  }
  // At least one certified complex touching point: double root whose
  // partner coordinate square is negative.
  int complex_touches = 0;
  for (double k1 : {1.1, std::sqrt(2.0), 3.0}) {
    ScalingPair pair = scaling_pair(k1);
    for (int i = 0; i < 100; ++i) {
      double d = -10.0 + 20.0 * i / 99.0;
      TangencyCertificate cert = tangency_certificate(
          scaled_circle({Pencil::Elliptic, d}, pair), pair.conic);
      if (cert.residual < 1e-9 && cert.partner_square < -1e-6) ++complex_touches;
    }
  }
  std::printf("       complex touching instances certified: %d\n",
              complex_touches);
  ok = ok && complex_touches > 0;
  criterion(6, "scaled-pencil tangency", ok, worst);
}

void criterion7_spot_checks() {
  const double ln2 = std::log(2.0), ln3 = std::log(3.0);
  double worst = 0.0;
  Point p1 = forward(WebId::CircCircHyperbola, {ln2, 0.0});
  worst = std::max({worst, std::abs(p1.s - 2.0 * std::sqrt(2.0) / 3.0),
                    std::abs(p1.t - 1.0 / 3.0), std::abs(measures(p1).g)});
  Point p3 = forward(WebId::ConicsHyperbolicPencil, {ln2, -ln2});
  worst = std::max({worst, std::abs(p3.s - 1.0), std::abs(p3.t - 1.5),
                    std::abs(measures(p3).a - 2.5)});
  Point p4 = forward(WebId::ConicsEllipticPencil, {ln3, -ln2});
  worst = std::max(worst, std::abs(measures(p4).g - 5.0 / 7.0));
  criterion(7, "exact-value spot checks", worst < 1e-12, worst);
}

void criterion8_rendering() {
  bool ok = true;
  double worst = 0.0;
  for (WebId web : all_webs) {
    SvgScene scene = render_web_lattice(preset_lattice(web));
    std::string svg_a = to_svg(scene);
    std::string svg_b = to_svg(render_web_lattice(preset_lattice(web)));
    ok = ok && svg_a == svg_b;
    for (const auto& pl : scene.polylines) {
      double lo = 1e300, hi = -1e300;
      for (const Point& p : pl.points) {
        FocalMeasures m = measures(p);
        double v = 0.0;
        switch (pl.family) {
          case CurveFamily::HyperbolicApollonian: v = m.f; break;
          case CurveFamily::EllipticApollonian: v = m.g; break;
          case CurveFamily::ConfocalEllipse: v = m.e; break;
          case CurveFamily::ConfocalHyperbola: v = m.h; break;
          case CurveFamily::VerticalLine: v = p.s; break;
          case CurveFamily::HorizontalLine: v = p.t; break;
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      worst = std::max(worst, hi - lo);
    }
  }
  ok = ok && worst < 1e-6;
  criterion(8, "rendering determinism and family fidelity", ok, worst);
}

}  // namespace

int main() {
  criterion1_level_sets();
  criterion2_closed_forms();
  criterion3_roundtrip();
  criterion4_jacobian();
  criterion5_hexagons();
  criterion6_tangency();
  criterion7_spot_checks();
  criterion8_rendering();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}

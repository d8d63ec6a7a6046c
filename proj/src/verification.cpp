#include "webs/verification.hpp"

#include <algorithm>
#include <cfloat>
#include <charconv>
#include <cmath>
#include <limits>

#include "webs/rng.hpp"

namespace webs {

namespace {

constexpr double default_tolerance = 1e-9;

// Hexagon chart moves: six unit steps along the three foliation directions
// (y = const, x - y = const, x = const), each used twice; the pattern sums
// to zero.
constexpr double hexagon_moves[6][2] = {{1, 0}, {1, 1},   {0, 1},
                                        {-1, 0}, {-1, -1}, {0, -1}};

WebCoords sample_box(Rng& rng, const Box& box) {
  return {rng.uniform(box.x0, box.x1), rng.uniform(box.y0, box.y1)};
}

enum class PairLaw { EqualX, EqualY, EqualDiagMinus, EqualDiagPlus };

// Second point of a pair sharing the law coordinate, kept inside the box.
WebCoords law_partner(Rng& rng, const Box& box, WebCoords c, PairLaw law) {
  switch (law) {
    case PairLaw::EqualX: return {c.x, rng.uniform(box.y0, box.y1)};
    case PairLaw::EqualY: return {rng.uniform(box.x0, box.x1), c.y};
    case PairLaw::EqualDiagMinus: {
      double lo = std::max(box.x0 - c.x, box.y0 - c.y);
      double hi = std::min(box.x1 - c.x, box.y1 - c.y);
      double step = rng.uniform(lo, hi);
      return {c.x + step, c.y + step};
    }
    case PairLaw::EqualDiagPlus: {
      double lo = std::max(box.x0 - c.x, c.y - box.y1);
      double hi = std::min(box.x1 - c.x, c.y - box.y0);
      double step = rng.uniform(lo, hi);
      return {c.x + step, c.y - step};
    }
  }
  return c;
}

// Measure evaluated on the plane image; the image coordinates themselves
// serve as the invariants of the diagonal-plus laws.
using MeasureFn = double (*)(const FocalMeasures&, const Point&);

struct LevelSetLaw {
  PairLaw law;
  MeasureFn measure;
};

double take_f(const FocalMeasures& m, const Point&) { return m.f; }
double take_g(const FocalMeasures& m, const Point&) { return m.g; }
double take_h(const FocalMeasures& m, const Point&) { return m.h; }
double take_e(const FocalMeasures& m, const Point&) { return m.e; }
double take_s(const FocalMeasures&, const Point& p) { return p.s; }
double take_t(const FocalMeasures&, const Point& p) { return p.t; }

std::vector<LevelSetLaw> level_set_laws(WebId web) {
  switch (web) {
    case WebId::CircCircHyperbola:
      return {{PairLaw::EqualY, take_f},
              {PairLaw::EqualX, take_g},
              {PairLaw::EqualDiagMinus, take_h}};
    case WebId::CircCircEllipse:
      return {{PairLaw::EqualY, take_f},
              {PairLaw::EqualX, take_g},
              {PairLaw::EqualDiagMinus, take_e}};
    case WebId::ConicsHyperbolicPencil:
      return {{PairLaw::EqualX, take_e},
              {PairLaw::EqualY, take_h},
              {PairLaw::EqualDiagMinus, take_f},
              {PairLaw::EqualDiagPlus, take_s}};
    case WebId::ConicsEllipticPencil:
      return {{PairLaw::EqualX, take_e},
              {PairLaw::EqualY, take_h},
              {PairLaw::EqualDiagMinus, take_g},
              {PairLaw::EqualDiagPlus, take_t}};
  }
  return {};
}

VerificationReport make_report(std::string name, std::optional<WebId> web,
                               long long samples, double max_error,
                               double tolerance, std::uint64_t seed) {
  return {std::move(name), web,   samples, max_error,
          tolerance,       max_error <= tolerance, seed};
}

// Shortest round-trip representation, locale independent.
std::string format_k1(double k1) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, k1);
  return std::string(buf, res.ptr);
}

}  // namespace

double discrepancy(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j{{"check_name", r.check_name}, {"samples", r.samples},
                   {"max_error", r.max_error},   {"tolerance", r.tolerance},
                   {"passed", r.passed},         {"seed", r.seed}};
  if (r.web) j["web"] = web_name(*r.web);
  return j;
}

VerificationReport verify_level_sets(WebId web, int n, std::uint64_t seed) {
  if (n < 2) throw OutOfRange("verify_level_sets requires n >= 2");
  Rng rng(seed);
  Box box = chart_sample_box(web);
  auto laws = level_set_laws(web);
  double max_error = 0.0;
  for (const auto& law : laws) {
    for (int i = 0; i < n; ++i) {
      WebCoords c1 = sample_box(rng, box);
      WebCoords c2 = law_partner(rng, box, c1, law.law);
      Point p1 = forward(web, c1);
      Point p2 = forward(web, c2);
      double m1 = law.measure(measures(p1), p1);
      double m2 = law.measure(measures(p2), p2);
      max_error = std::max(max_error, discrepancy(m1, m2));
    }
  }
  return make_report("level_sets", web,
                     static_cast<long long>(n) * static_cast<long long>(laws.size()),
                     max_error, default_tolerance, seed);
}

VerificationReport verify_closed_forms(WebId web, int n, std::uint64_t seed) {
  if (n < 1) throw OutOfRange("verify_closed_forms requires n >= 1");
  Rng rng(seed);
  Box box = chart_sample_box(web);
  double max_error = 0.0;
  for (int i = 0; i < n; ++i) {
    WebCoords c = sample_box(rng, box);
    FocalMeasures m = measures(forward(web, c));
    ChartMeasures cm = chart_measures(web, c);
    max_error = std::max({max_error, discrepancy(m.f, cm.f),
                          discrepancy(m.g, cm.g), discrepancy(m.h, cm.h),
                          discrepancy(m.e, cm.e)});
  }
  return make_report("closed_forms", web, n, max_error, default_tolerance, seed);
}

VerificationReport verify_roundtrip(WebId web, int n, std::uint64_t seed) {
  if (n < 1) throw OutOfRange("verify_roundtrip requires n >= 1");
  Rng rng(seed);
  double max_error = 0.0;
  // Plane side: forward(inverse(p)) = p. Half the points log-uniform in
  // (e, h) measure space, which reaches both the near-segment region
  // (e close to 2, where the w4 chart needs x < 0) and far-field points.
  for (int i = 0; i < n; ++i) {
    Point p;
    if (i % 2 == 0) {
      double e = 2.0 * rng.log_uniform(1.01, 10.0);
      double h = 2.0 * rng.log_uniform(0.01, 0.99);
      p = point_from_eh(e, h);
    } else {
      p = {rng.uniform(1e-2, 10.0), rng.uniform(1e-2, 10.0)};
    }
    Point q = forward(web, inverse(web, p));
    max_error = std::max({max_error, std::abs(q.s - p.s), std::abs(q.t - p.t)});
  }
  // Chart side: inverse(forward(c)) = c.
  Box box = chart_sample_box(web);
  for (int i = 0; i < n; ++i) {
    WebCoords c = sample_box(rng, box);
    WebCoords r = inverse(web, forward(web, c));
    max_error = std::max({max_error, std::abs(r.x - c.x), std::abs(r.y - c.y)});
  }
  return make_report("roundtrip", web, 2LL * n, max_error, default_tolerance,
                     seed);
}

VerificationReport verify_jacobian(WebId web, int n, std::uint64_t seed) {
  if (n < 1) throw OutOfRange("verify_jacobian requires n >= 1");
  Rng rng(seed);
  Box box = chart_sample_box(web);
  double min_abs_det = std::numeric_limits<double>::infinity();
  double first_sign = 0.0;
  bool sign_consistent = true;
  for (int i = 0; i < n; ++i) {
    double det = jacobian_determinant(web, sample_box(rng, box));
    min_abs_det = std::min(min_abs_det, std::abs(det));
    double sign = det > 0.0 ? 1.0 : -1.0;
    if (first_sign == 0.0) first_sign = sign;
    if (sign != first_sign) sign_consistent = false;
  }
  // Normalized so the 1e-8 determinant floor sits at tolerance 1: the check
  // passes iff every |det| > 1e-8 and all determinants share one sign.
  double max_error = sign_consistent ? 1e-8 / min_abs_det : DBL_MAX;
  return make_report("jacobian", web, n, max_error, 1.0, seed);
}

VerificationReport hexagon_closure(WebId web, Point seed_point, double delta,
                                   double tol) {
  if (!(delta > 0.0)) throw OutOfRange("hexagon step must be positive");
  Point start = seed_point;
  Point p = start;
  for (const auto& move : hexagon_moves) {
    WebCoords c;
    try {
      c = inverse(web, p);
    } catch (const OutsideQuadrant&) {
      throw LeftDomain("hexagon vertex left the open positive quadrant");
    }
    WebCoords next{c.x + delta * move[0], c.y + delta * move[1]};
    if (!domain_contains(web, next))
      throw LeftDomain("hexagon vertex left the chart domain of " +
                       std::string(web_name(web)));
    p = forward(web, next);
    if (p.s < guard_band || p.t < guard_band)
      throw LeftDomain("hexagon vertex left the open positive quadrant");
  }
  return make_report("hexagon_closure", web, 1, distance(p, start), tol, 0);
}

VerificationReport verify_hexagon_sweep(WebId web, int n, std::uint64_t seed) {
  if (n < 1) throw OutOfRange("verify_hexagon_sweep requires n >= 1");
  constexpr double delta_lo = 0.02, delta_hi = 0.15;
  Rng rng(seed);
  Box box = chart_sample_box(web);
  // Shrink so all six chart vertices (offsets up to 2 delta) stay in the box.
  double shrink = 2.0 * delta_hi + 0.01;
  Box inner{box.x0 + shrink, box.x1 - shrink, box.y0 + shrink, box.y1 - shrink};
  double max_error = 0.0;
  for (int i = 0; i < n; ++i) {
    Point p0 = forward(web, sample_box(rng, inner));
    double delta = rng.uniform(delta_lo, delta_hi);
    max_error = std::max(max_error,
                         hexagon_closure(web, p0, delta, default_tolerance).max_error);
  }
  return make_report("hexagon_closure", web, n, max_error, default_tolerance,
                     seed);
}

VerificationReport verify_tangency_sweep(double k1, int n) {
  if (n < 1) throw OutOfRange("verify_tangency_sweep requires n >= 1");
  ScalingPair pair = scaling_pair(k1);  // throws InvalidScale
  double max_error = 0.0;
  long long samples = 0;
  auto sweep_elliptic = [&] {
    for (int i = 0; i < n; ++i) {
      double d = n == 1 ? 0.0 : -10.0 + 20.0 * i / (n - 1);
      Circle c = scaled_circle({Pencil::Elliptic, d}, pair);
      max_error = std::max(max_error, tangency_residual(c, pair.conic));
      ++samples;
    }
  };
  sweep_elliptic();
  if (k1 < 1.0) {
    for (int i = 0; i < n; ++i) {
      double mu = n == 1 ? 2.0
                         : 1.01 * std::pow(50.0 / 1.01,
                                           static_cast<double>(i) / (n - 1));
      Circle c = scaled_circle({Pencil::Hyperbolic, mu}, pair);
      max_error = std::max(max_error, tangency_residual(c, pair.conic));
      ++samples;
    }
  }
  return make_report("tangency_sweep(k1=" + format_k1(k1) + ")", std::nullopt,
                     samples, max_error, default_tolerance, 0);
}

std::vector<VerificationReport> run_suite(const SuiteOptions& options) {
  std::vector<VerificationReport> reports;
  int n = std::max(options.samples, 2);
  int jacobian_n = std::max(100, n / 10);
  int hexagon_n = std::max(10, n / 100);
  int members = std::max(10, n / 100);
  for (WebId web : all_webs) {
    if (options.web && *options.web != web) continue;
    reports.push_back(verify_level_sets(web, n, options.seed));
    reports.push_back(verify_closed_forms(web, n, options.seed));
    reports.push_back(verify_roundtrip(web, n, options.seed));
    reports.push_back(verify_jacobian(web, jacobian_n, options.seed));
    reports.push_back(verify_hexagon_sweep(web, hexagon_n, options.seed));
  }
  if (!options.web) {
    const double k1s[] = {0.3, 1.0 / std::sqrt(2.0), 0.9,
                          1.1, std::sqrt(2.0),       3.0};
    for (double k1 : k1s) reports.push_back(verify_tangency_sweep(k1, members));
  }
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

}  // namespace webs

#include "webs/pencils_tangency.hpp"

#include <cmath>
#include <string>

namespace webs {

namespace {

constexpr double axis_tolerance = 1e-12;
constexpr double certification_tolerance = 1e-9;

// Tolerance for classifying the touching point as real; partner squares of
// the certified sweeps are O(1..100), so an absolute band is adequate.
constexpr double real_touch_tolerance = 1e-9;

void certify(const ScalingPair& pair) {
  constexpr int members = 50;
  auto check = [&](PencilParam p) {
    double res = tangency_residual(scaled_circle(p, pair), pair.conic);
    if (!(res < certification_tolerance))
      throw NoTangentConic("scaled pencil member (pencil value " +
                           std::to_string(p.value) + ") misses the conic, residual " +
                           std::to_string(res));
  };
  const bool mode_a = pair.k1 < 1.0;
  int elliptic_members = mode_a ? members : 2 * members;
  for (int i = 0; i < elliptic_members; ++i) {
    double d = -10.0 + 20.0 * i / (elliptic_members - 1);
    check({Pencil::Elliptic, d});
  }
  if (mode_a) {
    for (int i = 0; i < members; ++i) {
      double mu = 1.01 * std::pow(50.0 / 1.01, static_cast<double>(i) / (members - 1));
      check({Pencil::Hyperbolic, mu});
    }
  }
}

}  // namespace

Circle apollonian_circle(PencilParam p) {
  if (p.pencil == Pencil::Elliptic)
    return {{0.0, p.value}, std::hypot(1.0, p.value)};
  double mu = p.value;
  if (!(mu > 0.0) || std::abs(mu - 1.0) < guard_band)
    throw DegeneratePencilMember(
        "hyperbolic pencil ratio must be positive and away from 1, got " +
        std::to_string(mu));
  double d = mu * mu - 1.0;
  return {{(mu * mu + 1.0) / d, 0.0}, std::abs(2.0 * mu / d)};
}

Circle scale_circle(const Circle& c, double k) {
  if (!(k > 0.0)) throw InvalidScale("scale factor must be positive");
  return {c.center, c.radius * k};
}

Circle scaled_circle(PencilParam p, const ScalingPair& pair) {
  Circle c = apollonian_circle(p);
  if (p.pencil == Pencil::Elliptic) return scale_circle(c, pair.k1);
  if (!(pair.k2 > 0.0))
    throw InvalidScale("this scaling pair carries no hyperbolic-pencil factor");
  return scale_circle(c, pair.k2);
}

TangencyCertificate tangency_certificate(const Circle& circle,
                                         const CurveDescriptor& conic) {
  double a, b;
  bool hyperbola;
  if (const auto* el = std::get_if<ConfocalEllipse>(&conic)) {
    a = el->semi_major;
    b = el->semi_minor;
    hyperbola = false;
  } else if (const auto* hy = std::get_if<ConfocalHyperbola>(&conic)) {
    a = hy->semi_transverse;
    b = hy->semi_conjugate;
    hyperbola = true;
  } else {
    throw OutOfRange("tangency certificate requires a confocal conic");
  }

  double a2 = a * a, b2 = b * b;
  double r2 = circle.radius * circle.radius;
  double lead, lin, constant, partner0, partner1, root;
  if (std::abs(circle.center.s) <= axis_tolerance) {
    // Circle centered on the y-axis: substitute x^2 = a0 + a1 y^2,
    // quadratic in y.
    double a0 = a2;
    double a1 = hyperbola ? a2 / b2 : -a2 / b2;
    lead = 1.0 + a1;
    lin = -2.0 * circle.center.t;
    constant = a0 + circle.center.t * circle.center.t - r2;
    root = -lin / (2.0 * lead);
    partner0 = a0;
    partner1 = a1;
  } else if (std::abs(circle.center.t) <= axis_tolerance) {
    // Circle centered on the x-axis: substitute y^2 = b0 + b1 x^2,
    // quadratic in x.
    double b0 = hyperbola ? -b2 : b2;
    double b1 = hyperbola ? b2 / a2 : -b2 / a2;
    lead = 1.0 + b1;
    lin = -2.0 * circle.center.s;
    constant = circle.center.s * circle.center.s - r2 + b0;
    root = -lin / (2.0 * lead);
    partner0 = b0;
    partner1 = b1;
  } else {
    throw AxisMismatch("circle center is on neither symmetry axis of the conic");
  }

  double disc = lin * lin - 4.0 * lead * constant;
  double partner = partner0 + partner1 * root * root;
  return {std::abs(disc) / (lead * lead), root, partner,
          partner >= -real_touch_tolerance};
}

double tangency_residual(const Circle& circle, const CurveDescriptor& conic) {
  return tangency_certificate(circle, conic).residual;
}

ScalingPair scaling_pair(double k1, std::optional<double> k2) {
  if (!(k1 > 0.0)) throw InvalidScale("k1 must be positive");
  if (std::abs(k1 - 1.0) < guard_band)
    throw InvalidScale("k1 = 1 scales to the original pencils; no conic is tangent");
  ScalingPair pair{k1, 0.0, ConfocalEllipse{0.0, 0.0}};
  if (k1 < 1.0) {
    double k2_derived = std::sqrt((1.0 - k1) * (1.0 + k1));
    if (k2 && std::abs(*k2 - k2_derived) > 1e-9)
      throw InvalidScale("mode A requires k1^2 + k2^2 = 1");
    pair.k2 = k2_derived;
    pair.conic = ConfocalHyperbola{k1, k2_derived};
  } else {
    pair.conic = ConfocalEllipse{k1, std::sqrt((k1 - 1.0) * (k1 + 1.0))};
  }
  certify(pair);
  return pair;
}

CurveDescriptor tangent_conic_for_scaling(double k1, std::optional<double> k2) {
  return scaling_pair(k1, k2).conic;
}

}  // namespace webs

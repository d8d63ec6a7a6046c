#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "webs/pencils_tangency.hpp"
#include "webs/web_maps.hpp"

// Executable certificates for the geometric claims behind the library:
// level-set constancy of each web's measures, closed-form agreement,
// surjectivity roundtrips, Jacobian nondegeneracy, Thomsen hexagon closure,
// and the scaled-pencil tangency sweeps. Every check is deterministic given
// its seed and reports max_error against a fixed tolerance.

namespace webs {

struct VerificationReport {
  std::string check_name;
  std::optional<WebId> web;  // absent for web-independent checks
  long long samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;       // max_error <= tolerance
  std::uint64_t seed = 0;
};

// One JSON object with exactly the report fields; `web` omitted when absent.
nlohmann::json to_json(const VerificationReport& report);

// Mixed relative/absolute discrepancy used throughout: |a - b| scaled by
// max(1, |a|, |b|).
double discrepancy(double a, double b);

// For n random chart pairs per level-set law of the web (equal x, equal y,
// equal x-y, and equal x+y where applicable), compares the law's measure on
// the forward images. Requires n >= 2.
VerificationReport verify_level_sets(WebId web, int n, std::uint64_t seed);

// Measures of forward(c) from raw focal distances vs. chart_measures(c) at
// n random chart points.
VerificationReport verify_closed_forms(WebId web, int n, std::uint64_t seed);

// forward(inverse(p)) over n plane points (half uniform in [1e-2, 10]^2,
// half log-uniform in (e, h) measure space so both small-e and large-e
// regions are exercised) plus inverse(forward(c)) over n chart points;
// max absolute displacement.
VerificationReport verify_roundtrip(WebId web, int n, std::uint64_t seed);

// Finite-difference determinant at n interior chart samples. Passes iff
// every |det| > 1e-8 and all determinants share one sign; max_error is
// 1e-8 / min|det| (so the tolerance is 1), or DBL_MAX on a sign flip.
VerificationReport verify_jacobian(WebId web, int n, std::uint64_t seed);

// Thomsen hexagon built plane-side: starting from seed_point, six arcs
// alternate along the web's three foliations, stepping +-delta in chart
// coordinates and crossing through inverse/forward at every vertex, in the
// pattern (+d,0)(+d,+d)(0,+d)(-d,0)(-d,-d)(0,-d) that closes exactly.
// Reports |end - start|. Throws LeftDomain if a vertex exits Omega or the
// guarded quadrant.
VerificationReport hexagon_closure(WebId web, Point seed_point, double delta,
                                   double tol = 1e-9);

// n random (seed point, delta) hexagon instances, delta in [0.02, 0.15].
VerificationReport verify_hexagon_sweep(WebId web, int n, std::uint64_t seed);

// Pencil sweeps against the certified conic for this k1: both pencils in
// mode A, the elliptic pencil in mode B, n members each; max discriminant
// residual. Throws InvalidScale for k1 <= 0 or k1 = 1.
VerificationReport verify_tangency_sweep(double k1, int n);

struct SuiteOptions {
  std::optional<WebId> web;  // restrict to one web (skips tangency sweeps)
  std::uint64_t seed = 42;
  int samples = 10000;       // base count; derived checks scale it down
};

// The default suite: per web, level sets / closed forms / roundtrip with
// `samples` draws, Jacobian with samples/10, hexagons with samples/100;
// then tangency sweeps at k1 in {0.3, 1/sqrt2, 0.9, 1.1, sqrt2, 3} with
// samples/100 members. Report order is fixed.
std::vector<VerificationReport> run_suite(const SuiteOptions& options);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace webs

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace webs {

// Deterministic sampling for the verification checks: std::mt19937_64 seeded
// directly, doubles built from the top 53 bits. The mt19937_64 output
// sequence is fixed by the standard, so identical seeds give bit-identical
// samples on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Log-uniform in [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace webs

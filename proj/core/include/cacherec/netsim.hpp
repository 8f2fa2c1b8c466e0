#pragma once

#include <cstdint>
#include <vector>

#include "cacherec/rng.hpp"
#include "cacherec/sgeom.hpp"

namespace cacherec {

struct DropConfig {
  double window_radius = 0.0;  // 0 selects the default window rule
  long n_drops = 100000;
  double cache_prob = 1.0;     // c_f
  NetworkParams params;
  std::uint64_t seed = 0;

  void validate() const;
};

struct DropOutcome {
  long successes = 0;
  long failures = 0;
  double probability = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/n)
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// N ~ Poisson(density * pi * radius^2) points uniform on the disk.
std::vector<Point> sample_ppp(double density, double radius, Rng& rng);

// R = 15 / sqrt(density * pi * max(cache_prob, 0.05)); keeps both the
// no-server probability and the edge-interference truncation error well
// below the 0.01 validation tolerance.
double default_window_radius(double density, double cache_prob);

// Monte Carlo estimate of the per-content offload success probability:
// PPP drop, independent thinning by cache_prob, nearest caching BS serves
// with Rayleigh power h ~ Exp(1), every other BS interferes with
// Gamma(N_t, 1/N_t) power; success iff h r^-a / (N_t * I) >= gamma0.
// Per-drop generators derive from (seed, drop index), so the outcome is
// independent of execution order.
DropOutcome simulate_offload(const DropConfig& cfg);

}  // namespace cacherec

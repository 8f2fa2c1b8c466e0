#pragma once

#include "cacherec/sgeom.hpp"
#include "cacherec/types.hpp"

namespace cacherec {

struct CachingPolicy {
  Vec probabilities;   // c_f in [0,1]
  int cache_size = 0;  // N_c

  void validate() const;
};

// sum_f clamp01(sqrt(g2*pi_f)/(sqrt(mu)*g1) - g2/g1) - cache_size.
// Monotone nonincreasing in mu.
double multiplier_residual(double mu, const Vec& popularity, const SirConstants& k,
                           int cache_size);

struct BisectionStats {
  int iterations = 0;
  double multiplier = 0.0;
  double residual = 0.0;
};

// Truncated square-root allocation with the multiplier found by bisection
// on (0, delta0], delta0 = max_f pi_f / g2. The cache budget is met within
// tol unless every content with positive popularity is already at c_f = 1.
CachingPolicy optimal_caching(const Vec& popularity, const SirConstants& k,
                              int cache_size, double tol = 1e-9,
                              BisectionStats* stats = nullptr);

}  // namespace cacherec

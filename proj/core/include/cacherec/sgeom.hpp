#pragma once

#include <cmath>

#include "cacherec/catalog.hpp"
#include "cacherec/demand.hpp"
#include "cacherec/types.hpp"

namespace cacherec {

struct NetworkParams {
  double bs_density = 1.0;      // lambda, BSs per unit area
  int n_antennas = 1;           // N_t
  double pathloss_alpha = 3.76; // alpha, must exceed 2
  double sir_threshold = 0.1;   // gamma0, linear scale

  void validate() const;
};

// Interference constants of the closed-form offload probability:
//   P(success | cache prob c) = c / (g1 * c + g2)
struct SirConstants {
  double g1 = 0.0;
  double g2 = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// log Gamma(x) for x > 0.
double ln_gamma(double x);

// Gauss hypergeometric 2F1(a, b; c; z) for z < 1. Direct power series for
// |z| <= 0.5; Pfaff transform z -> z/(z-1) for z < -0.5, which keeps the
// series argument in (0, 1) for arbitrarily large negative z.
double gauss_2f1(double a, double b, double c, double z);

SirConstants sir_constants(const NetworkParams& params);

// c / (g1*c + g2); increasing and concave in c on [0,1].
double offload_success_prob(double cache_prob, const SirConstants& k);

// Successful offloading probability:
//   s = sum_u v_u sum_f q_uf * offload_success_prob(c_f)
double objective(const Vec& caching, const RecommendationPolicy& policy,
                 const Vec& thresholds, const UserPopulation& population,
                 const SirConstants& k);

// Same objective evaluated from a precomputed popularity vector.
double objective_from_popularity(const Vec& caching, const Vec& popularity,
                                 const SirConstants& k);

}  // namespace cacherec

#pragma once

#include <cstdint>

#include "cacherec/catalog.hpp"

namespace cacherec {

// Hermetic stand-in for a play-count dataset: Zipf base popularity split
// into heterogeneous per-user rows by a Dirichlet perturbation, activity
// levels from normalized Gamma draws, thresholds uniform on [0, theta_max].
struct SyntheticSpec {
  int n_users = 50;
  int n_contents = 100;
  double zipf_exponent = 0.8;
  double dirichlet_scale = 5.0;  // higher = rows closer to the Zipf base
  double theta_max = 0.04;
  std::uint64_t seed = 1;
};

UserPopulation make_zipf_population(const SyntheticSpec& spec);

}  // namespace cacherec

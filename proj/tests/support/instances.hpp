#pragma once

// Shared random-instance generators for property-style tests.

#include <cstdint>

#include "cacherec/catalog.hpp"
#include "cacherec/demand.hpp"
#include "cacherec/rng.hpp"
#include "cacherec/sgeom.hpp"

namespace testsupport {

inline cacherec::Vec random_simplex(int n, cacherec::Rng& rng, double floor = 0.0) {
  cacherec::Vec v(n);
  double sum = 0.0;
  for (double& x : v) {
    x = floor + rng.exponential();
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

inline cacherec::UserPopulation random_population(int n_users, int n_contents,
                                                  std::uint64_t seed,
                                                  double theta_max = 0.5) {
  cacherec::Rng rng(seed);
  cacherec::UserPopulation pop;
  pop.n_users = n_users;
  pop.activity = random_simplex(n_users, rng);
  pop.preference.reserve(n_users);
  for (int u = 0; u < n_users; ++u) {
    pop.preference.push_back(random_simplex(n_contents, rng));
  }
  cacherec::Vec theta(n_users);
  for (double& t : theta) t = theta_max * rng.uniform();
  pop.thresholds = theta;
  return pop;
}

inline cacherec::RecommendationPolicy random_policy(const cacherec::UserPopulation& pop,
                                                    int list_size,
                                                    cacherec::Rng& rng) {
  cacherec::RecommendationPolicy policy;
  policy.list_size = list_size;
  const int nf = pop.n_contents();
  for (int u = 0; u < pop.n_users; ++u) {
    std::vector<int> all(nf);
    for (int f = 0; f < nf; ++f) all[f] = f;
    for (int i = 0; i < list_size; ++i) {
      const int j = i + rng.uniform_int(nf - i);
      std::swap(all[i], all[j]);
    }
    std::vector<int> list(all.begin(), all.begin() + list_size);
    std::sort(list.begin(), list.end());
    policy.lists.push_back(std::move(list));
  }
  return policy;
}

inline cacherec::SirConstants reference_constants() {
  // alpha = 3.76, two antennas, -8 dB threshold
  cacherec::NetworkParams params{1.0, 2, 3.76, cacherec::db_to_linear(-8.0)};
  return cacherec::sir_constants(params);
}

}  // namespace testsupport

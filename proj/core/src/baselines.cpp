#include "cacherec/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cacherec {

namespace {

std::vector<int> top_k_indices(const Vec& values, int k) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  order.resize(std::min<std::size_t>(order.size(), k));
  return order;
}

RecommendationPolicy top_preference_lists(const UserPopulation& population,
                                          int list_size) {
  RecommendationPolicy policy;
  policy.list_size = list_size;
  policy.lists.reserve(population.n_users);
  for (int u = 0; u < population.n_users; ++u) {
    std::vector<int> list = top_k_indices(population.preference[u], list_size);
    std::sort(list.begin(), list.end());
    policy.lists.push_back(std::move(list));
  }
  return policy;
}

Vec inherent_popularity(const UserPopulation& population) {
  Vec pop(population.n_contents(), 0.0);
  for (int u = 0; u < population.n_users; ++u) {
    for (int f = 0; f < population.n_contents(); ++f) {
      pop[f] += population.activity[u] * population.preference[u][f];
    }
  }
  return pop;
}

}  // namespace

Vec top_k_caching(const Vec& popularity, int cache_size) {
  if (cache_size < 1 || cache_size > static_cast<int>(popularity.size())) {
    throw std::invalid_argument("top_k_caching: cache_size out of range");
  }
  Vec c(popularity.size(), 0.0);
  for (int f : top_k_indices(popularity, cache_size)) c[f] = 1.0;
  return c;
}

JointPolicy baseline_rec_up_cache_pop_rec_adj(const UserPopulation& population,
                                              const Vec& thresholds,
                                              const SirConstants& k, int cache_size,
                                              int list_size) {
  RecommendationPolicy policy = top_preference_lists(population, list_size);
  const Vec pop = popularity_after_rec(policy, thresholds, population);
  const Vec cache = top_k_caching(pop, cache_size);

  // swap the lowest-preference non-cached entries for the highest-preference
  // cached contents available in the user's potential set
  for (int u = 0; u < population.n_users; ++u) {
    const Vec& row = population.preference[u];
    auto& list = policy.lists[u];
    const std::vector<int> potential =
        potential_set(row, thresholds[u], list_size);
    std::vector<int> cached_candidates;
    for (int f : potential) {
      if (cache[f] > 0.0 && std::find(list.begin(), list.end(), f) == list.end()) {
        cached_candidates.push_back(f);
      }
    }
    // preference descending, index ascending on ties
    std::stable_sort(cached_candidates.begin(), cached_candidates.end(),
                     [&](int a, int b) { return row[a] > row[b]; });
    std::size_t next = 0;
    for (;;) {
      int worst = -1;
      for (int f : list) {
        if (cache[f] == 0.0 && (worst < 0 || row[f] < row[worst])) worst = f;
      }
      if (worst < 0 || next >= cached_candidates.size()) break;
      list.erase(std::find(list.begin(), list.end(), worst));
      list.insert(std::upper_bound(list.begin(), list.end(), cached_candidates[next]),
                  cached_candidates[next]);
      ++next;
    }
  }

  JointPolicy out;
  out.recommendation = std::move(policy);
  out.caching = CachingPolicy{cache, cache_size};
  out.achieved_objective =
      objective(cache, out.recommendation, thresholds, population, k);
  return out;
}

JointPolicy baseline_rec_pop_cache_pop(const UserPopulation& population,
                                       const Vec& thresholds, const SirConstants& k,
                                       int cache_size, int list_size) {
  const int nf = population.n_contents();
  std::vector<int> shared;
  RecommendationPolicy policy;
  policy.list_size = list_size;

  for (int round = 0; round < list_size; ++round) {
    int best_f = -1;
    double best_obj = -1.0;
    for (int f = 0; f < nf; ++f) {
      if (std::find(shared.begin(), shared.end(), f) != shared.end()) continue;
      std::vector<int> grown = shared;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), f), f);
      policy.lists.assign(population.n_users, grown);
      const Vec pop = popularity_after_rec(policy, thresholds, population);
      const Vec cache = top_k_caching(pop, cache_size);
      const double obj = objective_from_popularity(cache, pop, k);
      if (obj > best_obj + 1e-15) {
        best_obj = obj;
        best_f = f;
      }
    }
    shared.insert(std::upper_bound(shared.begin(), shared.end(), best_f), best_f);
  }

  policy.lists.assign(population.n_users, shared);
  const Vec pop = popularity_after_rec(policy, thresholds, population);
  const Vec cache = top_k_caching(pop, cache_size);

  JointPolicy out;
  out.recommendation = std::move(policy);
  out.caching = CachingPolicy{cache, cache_size};
  out.achieved_objective = objective_from_popularity(cache, pop, k);
  return out;
}

JointPolicy baseline_cache_opt_rec_up(const UserPopulation& population,
                                      const Vec& thresholds, const SirConstants& k,
                                      int cache_size, int list_size) {
  JointPolicy out;
  out.recommendation = top_preference_lists(population, list_size);
  out.caching = optimal_caching(inherent_popularity(population), k, cache_size);
  out.achieved_objective = objective(out.caching.probabilities, out.recommendation,
                                     thresholds, population, k);
  return out;
}

JointPolicy baseline_cache_opt_no_rec(const UserPopulation& population,
                                      const SirConstants& k, int cache_size) {
  const Vec pop = inherent_popularity(population);
  JointPolicy out;
  out.caching = optimal_caching(pop, k, cache_size);
  out.achieved_objective = objective_from_popularity(out.caching.probabilities, pop, k);
  return out;
}

}  // namespace cacherec

#include "cacherec/recopt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cacherec {

std::vector<int> potential_set(const Vec& pref_row, double threshold, int list_size) {
  const int nf = static_cast<int>(pref_row.size());
  int above = 0;
  for (double p : pref_row) {
    if (p >= threshold) ++above;
  }
  const int na = std::min(nf, above + list_size);

  std::vector<int> order(nf);
  std::iota(order.begin(), order.end(), 0);
  // preference descending, index ascending on ties
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pref_row[a] > pref_row[b]; });
  order.resize(na);
  std::sort(order.begin(), order.end());
  return order;
}

namespace {

// Popularity delta of replacing user u's demand row: the objective only
// depends on the policy through pi_f = sum_u v_u q_uf, so a tentative add
// touches one row of the mixture.
Vec popularity_with_row(const Vec& base, const Vec& old_row, const Vec& new_row,
                        double weight) {
  Vec pop = base;
  for (std::size_t f = 0; f < pop.size(); ++f) {
    pop[f] += weight * (new_row[f] - old_row[f]);
  }
  return pop;
}

double eval_popularity(const Vec& popularity, const SirConstants& k, int cache_size,
                       double tol, GreedyTrace* trace) {
  BisectionStats stats;
  const CachingPolicy c = optimal_caching(popularity, k, cache_size, tol, &stats);
  if (trace) {
    ++trace->tentative_evaluations;
    trace->bisection_iterations += stats.iterations;
  }
  return objective_from_popularity(c.probabilities, popularity, k);
}

}  // namespace

double objective_with_tentative(const RecommendationPolicy& policy, int user,
                                int content, const Vec& thresholds,
                                const UserPopulation& population,
                                const SirConstants& k, int cache_size, double tol) {
  const auto& list = policy.lists[user];
  if (std::find(list.begin(), list.end(), content) != list.end()) {
    throw std::invalid_argument("objective_with_tentative: content already listed");
  }
  Vec base = popularity_after_rec(policy, thresholds, population);
  std::vector<int> grown = list;
  grown.insert(std::upper_bound(grown.begin(), grown.end(), content), content);
  const Vec old_row = post_rec_preference(list, policy.list_size, thresholds[user],
                                          population.preference[user]);
  const Vec new_row = post_rec_preference(grown, policy.list_size, thresholds[user],
                                          population.preference[user]);
  const Vec pop = popularity_with_row(base, old_row, new_row, population.activity[user]);
  return eval_popularity(pop, k, cache_size, tol, nullptr);
}

JointPolicy greedy_joint(const UserPopulation& population, const Vec& thresholds,
                         const SirConstants& k, int cache_size, int list_size,
                         double tol, GreedyTrace* trace) {
  population.validate();
  const int nu = population.n_users;
  const int nf = population.n_contents();
  if (static_cast<int>(thresholds.size()) != nu) {
    throw std::invalid_argument("greedy_joint: thresholds length mismatch");
  }
  if (list_size < 1 || list_size > nf) {
    throw std::invalid_argument("greedy_joint: list_size out of range");
  }

  RecommendationPolicy policy;
  policy.list_size = list_size;
  policy.lists.assign(nu, {});

  std::vector<std::vector<int>> remaining(nu);
  for (int u = 0; u < nu; ++u) {
    remaining[u] = potential_set(population.preference[u], thresholds[u], list_size);
  }

  // per-user post-recommendation rows and the popularity mixture
  Matrix rows(nu);
  Vec popularity(nf, 0.0);
  for (int u = 0; u < nu; ++u) {
    rows[u] = post_rec_preference(policy.lists[u], list_size, thresholds[u],
                                  population.preference[u]);
    for (int f = 0; f < nf; ++f) popularity[f] += population.activity[u] * rows[u][f];
  }

  std::vector<bool> active(nu, true);
  const long total_commits = static_cast<long>(nu) * list_size;
  for (long commit = 0; commit < total_commits; ++commit) {
    int best_u = -1, best_f = -1;
    double best_obj = -1.0;
    Vec best_row;
    for (int u = 0; u < nu; ++u) {
      if (!active[u]) continue;
      if (remaining[u].empty()) {
        throw std::runtime_error("greedy_joint: potential set exhausted for user " +
                                 std::to_string(u));
      }
      for (int f : remaining[u]) {
        std::vector<int> grown = policy.lists[u];
        grown.insert(std::upper_bound(grown.begin(), grown.end(), f), f);
        Vec new_row = post_rec_preference(grown, list_size, thresholds[u],
                                          population.preference[u]);
        Vec pop = popularity_with_row(popularity, rows[u], new_row,
                                      population.activity[u]);
        const double obj = eval_popularity(pop, k, cache_size, tol, trace);
        if (obj > best_obj + 1e-15) {
          best_obj = obj;
          best_u = u;
          best_f = f;
          best_row = std::move(new_row);
        }
      }
    }

    auto& list = policy.lists[best_u];
    list.insert(std::upper_bound(list.begin(), list.end(), best_f), best_f);
    rows[best_u] = std::move(best_row);
    // rebuild the mixture from the rows at commit time so incremental
    // round-off never accumulates across commits
    std::fill(popularity.begin(), popularity.end(), 0.0);
    for (int u = 0; u < nu; ++u) {
      for (int f = 0; f < nf; ++f) popularity[f] += population.activity[u] * rows[u][f];
    }
    remaining[best_u].erase(
        std::find(remaining[best_u].begin(), remaining[best_u].end(), best_f));
    if (static_cast<int>(list.size()) == list_size) active[best_u] = false;
    if (trace) trace->commit_objectives.push_back(best_obj);
  }

  // exact recomputation at the end, not the incrementally tracked value
  JointPolicy out;
  out.recommendation = std::move(policy);
  const Vec final_pop =
      popularity_after_rec(out.recommendation, thresholds, population);
  out.caching = optimal_caching(final_pop, k, cache_size, tol);
  out.achieved_objective =
      objective_from_popularity(out.caching.probabilities, final_pop, k);
  return out;
}

}  // namespace cacherec

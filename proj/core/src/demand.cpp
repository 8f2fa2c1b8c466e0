#include "cacherec/demand.hpp"

#include <algorithm>
#include <stdexcept>

namespace cacherec {

void RecommendationPolicy::validate(int n_contents) const {
  if (list_size < 1 || list_size > n_contents) {
    throw std::invalid_argument("RecommendationPolicy: list_size out of range");
  }
  for (const auto& list : lists) {
    if (static_cast<int>(list.size()) != list_size) {
      throw std::invalid_argument("RecommendationPolicy: list size != N_m");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] < 0 || list[i] >= n_contents) {
        throw std::invalid_argument("RecommendationPolicy: content index out of range");
      }
      if (i > 0 && list[i] <= list[i - 1]) {
        throw std::invalid_argument("RecommendationPolicy: list not sorted/unique");
      }
    }
  }
}

std::vector<int> candidate_subset(const std::vector<int>& list, double threshold,
                                  const Vec& pref_row) {
  if (threshold < 0.0 || threshold > 1.0) {
    throw std::invalid_argument("candidate_subset: threshold outside [0,1]");
  }
  std::vector<int> out;
  for (int f : list) {
    if (pref_row[f] >= threshold) out.push_back(f);
  }
  return out;
}

Vec post_rec_preference(const std::vector<int>& list, int list_size,
                        double threshold, const Vec& pref_row) {
  if (list_size < 1) throw std::invalid_argument("post_rec_preference: list_size < 1");
  const std::vector<int> cand = candidate_subset(list, threshold, pref_row);
  const double accept = static_cast<double>(cand.size()) / list_size;

  Vec q(pref_row.size(), 0.0);
  for (std::size_t f = 0; f < pref_row.size(); ++f) {
    q[f] = (1.0 - accept) * pref_row[f];
  }
  if (!cand.empty()) {
    double cand_mass = 0.0;
    for (int f : cand) cand_mass += pref_row[f];
    if (cand_mass <= 0.0) {
      throw std::runtime_error(
          "post_rec_preference: nonempty candidate subset with zero mass");
    }
    for (int f : cand) q[f] += accept * pref_row[f] / cand_mass;
  }
  return q;
}

double effective_threshold(double threshold, const Vec& pref_row) {
  if (threshold < 0.0 || threshold > 1.0) {
    throw std::invalid_argument("effective_threshold: threshold outside [0,1]");
  }
  Vec grid = pref_row;
  grid.push_back(0.0);
  grid.push_back(1.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  // smallest grid value >= threshold; grid contains 1, so this always exists
  const auto it = std::lower_bound(grid.begin(), grid.end(), threshold);
  return *it;
}

DemandAfterRec demand_after_rec(const RecommendationPolicy& policy,
                                const Vec& thresholds,
                                const UserPopulation& population) {
  if (static_cast<int>(thresholds.size()) != population.n_users) {
    throw std::invalid_argument("demand_after_rec: thresholds length mismatch");
  }
  if (static_cast<int>(policy.lists.size()) != population.n_users) {
    throw std::invalid_argument("demand_after_rec: policy user count mismatch");
  }
  DemandAfterRec out;
  out.q.reserve(population.n_users);
  out.acceptance.reserve(population.n_users);
  out.candidates.reserve(population.n_users);
  for (int u = 0; u < population.n_users; ++u) {
    const Vec& row = population.preference[u];
    auto cand = candidate_subset(policy.lists[u], thresholds[u], row);
    out.acceptance.push_back(static_cast<double>(cand.size()) / policy.list_size);
    out.q.push_back(post_rec_preference(policy.lists[u], policy.list_size,
                                        thresholds[u], row));
    out.candidates.push_back(std::move(cand));
  }
  return out;
}

Vec popularity_after_rec(const RecommendationPolicy& policy, const Vec& thresholds,
                         const UserPopulation& population) {
  Vec pop(population.n_contents(), 0.0);
  for (int u = 0; u < population.n_users; ++u) {
    const Vec q = post_rec_preference(policy.lists[u], policy.list_size,
                                      thresholds[u], population.preference[u]);
    const double v = population.activity[u];
    for (std::size_t f = 0; f < q.size(); ++f) pop[f] += v * q[f];
  }
  return pop;
}

}  // namespace cacherec

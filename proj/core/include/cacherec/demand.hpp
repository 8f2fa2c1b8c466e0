#pragma once

#include <vector>

#include "cacherec/catalog.hpp"
#include "cacherec/types.hpp"

namespace cacherec {

struct RecommendationPolicy {
  int list_size = 0;                    // N_m
  std::vector<std::vector<int>> lists;  // sorted content indices per user

  void validate(int n_contents) const;
};

// {f in list : p_uf >= threshold}; the comparison is exact, no epsilon slack.
std::vector<int> candidate_subset(const std::vector<int>& list, double threshold,
                                  const Vec& pref_row);

// Post-recommendation request distribution of one user:
//   q_f = q_u * p_f / sum_{A} p  for f in the candidate subset A, plus
//   (1 - q_u) * p_f everywhere, with q_u = |A| / list_size.
// `list` may hold fewer than list_size entries (greedy construction).
Vec post_rec_preference(const std::vector<int>& list, int list_size,
                        double threshold, const Vec& pref_row);

// Right end-point of the preference-grid interval containing threshold;
// grid is the distinct {p_uf} values with sentinels 0 and 1.
double effective_threshold(double threshold, const Vec& pref_row);

struct DemandAfterRec {
  Matrix q;                                   // q_uf rows
  Vec acceptance;                             // q_u = |A_u| / N_m
  std::vector<std::vector<int>> candidates;   // A_u
};

DemandAfterRec demand_after_rec(const RecommendationPolicy& policy,
                                const Vec& thresholds,
                                const UserPopulation& population);

// Content popularity after recommendation: pi_f = sum_u v_u q_uf.
Vec popularity_after_rec(const RecommendationPolicy& policy, const Vec& thresholds,
                         const UserPopulation& population);

}  // namespace cacherec

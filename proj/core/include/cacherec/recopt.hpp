#pragma once

#include "cacherec/cacheopt.hpp"
#include "cacherec/demand.hpp"
#include "cacherec/sgeom.hpp"
#include "cacherec/types.hpp"

namespace cacherec {

// Top-N_a contents of the row by preference, N_a = |{f : p_uf >= threshold}|
// + list_size, capped at N_f. Ties break by ascending content index.
std::vector<int> potential_set(const Vec& pref_row, double threshold, int list_size);

struct JointPolicy {
  RecommendationPolicy recommendation;
  CachingPolicy caching;
  double achieved_objective = 0.0;
};

struct GreedyTrace {
  Vec commit_objectives;            // objective after each commit, nondecreasing
  long tentative_evaluations = 0;   // inner caching solves
  long bisection_iterations = 0;    // summed over all solves
};

// Hierarchical greedy: grows one (user, content) recommendation per step,
// re-solving the inner caching allocation for every tentative add, until
// every list holds list_size contents. Ties on the gain (within 1e-15)
// break lexicographically by (user, content).
JointPolicy greedy_joint(const UserPopulation& population, const Vec& thresholds,
                         const SirConstants& k, int cache_size, int list_size,
                         double tol = 1e-9, GreedyTrace* trace = nullptr);

// Objective after tentatively adding (user, content) to the policy, with
// the inner caching re-solved. Does not mutate the policy.
double objective_with_tentative(const RecommendationPolicy& policy, int user,
                                int content, const Vec& thresholds,
                                const UserPopulation& population,
                                const SirConstants& k, int cache_size,
                                double tol = 1e-9);

}  // namespace cacherec

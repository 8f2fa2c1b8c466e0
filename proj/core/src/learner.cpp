#include "cacherec/learner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cacherec/demand.hpp"

namespace cacherec {

void update_threshold(ThresholdEstimate& est, const RequestObservation& obs,
                      const Matrix& preference) {
  if (!obs.from_list) return;
  const double p = preference[obs.user][obs.content];
  if (est.value[obs.user] > p) {
    est.value[obs.user] = p;
    ++est.updates[obs.user];
  }
}

RecommendationPolicy exploration_policy(const ThresholdEstimate& est,
                                        const UserPopulation& population,
                                        int list_size, Rng& rng) {
  const int nf = population.n_contents();
  if (list_size < 1 || list_size > nf) {
    throw std::invalid_argument("exploration_policy: list_size out of range");
  }
  RecommendationPolicy policy;
  policy.list_size = list_size;
  policy.lists.reserve(population.n_users);
  for (int u = 0; u < population.n_users; ++u) {
    const Vec& row = population.preference[u];
    std::vector<int> below;
    for (int f = 0; f < nf; ++f) {
      if (row[f] < est.value[u]) below.push_back(f);
    }
    std::vector<int> list;
    if (static_cast<int>(below.size()) >= list_size) {
      // partial Fisher-Yates draw without replacement
      for (int i = 0; i < list_size; ++i) {
        const int j = i + rng.uniform_int(static_cast<int>(below.size()) - i);
        std::swap(below[i], below[j]);
        list.push_back(below[i]);
      }
    } else {
      list = below;
      // top up by descending preference among the remainder
      std::vector<int> rest;
      for (int f = 0; f < nf; ++f) {
        if (row[f] >= est.value[u]) rest.push_back(f);
      }
      std::stable_sort(rest.begin(), rest.end(),
                       [&](int a, int b) { return row[a] > row[b]; });
      for (int f : rest) {
        if (static_cast<int>(list.size()) == list_size) break;
        list.push_back(f);
      }
    }
    std::sort(list.begin(), list.end());
    policy.lists.push_back(std::move(list));
  }
  return policy;
}

EpsilonSchedule EpsilonSchedule::constant(double eps) {
  if (eps < 0.0 || eps > 1.0) {
    throw std::invalid_argument("EpsilonSchedule: epsilon outside [0,1]");
  }
  return EpsilonSchedule{Kind::kConstant, eps};
}

double EpsilonSchedule::at(long slot) const {
  if (slot < 1) throw std::invalid_argument("EpsilonSchedule: slot must be >= 1");
  if (kind == Kind::kConstant) return epsilon;
  return std::min(1.0, 1.0 / static_cast<double>(slot));
}

LearningRun run_learning(const UserPopulation& population, const SirConstants& k,
                         const LearningConfig& config) {
  population.validate();
  if (!population.thresholds) {
    throw std::invalid_argument("run_learning: population lacks true thresholds");
  }
  if (config.requests_per_slot < 1) {
    throw std::invalid_argument("run_learning: requests_per_slot must be >= 1");
  }
  const Vec& theta_true = *population.thresholds;
  const int nu = population.n_users;

  LearningRun run;
  run.effective_thresholds.resize(nu);
  for (int u = 0; u < nu; ++u) {
    run.effective_thresholds[u] =
        effective_threshold(theta_true[u], population.preference[u]);
  }

  Rng mode_rng = Rng::derive(config.seed, 0);
  Rng explore_rng = Rng::derive(config.seed, 1);
  Rng request_rng = Rng::derive(config.seed, 2);

  ThresholdEstimate est = ThresholdEstimate::initial(nu);
  long slots_after_convergence = 0;

  for (long t = 1; t <= config.n_slots; ++t) {
    const double eps = config.schedule.at(t);
    const bool explore = mode_rng.uniform() < eps;

    RecommendationPolicy policy;
    CachingPolicy caching;
    if (explore) {
      policy = exploration_policy(est, population, config.list_size, explore_rng);
      const Vec pop = popularity_after_rec(policy, est.value, population);
      caching = optimal_caching(pop, k, config.cache_size, config.tol);
    } else {
      JointPolicy joint = greedy_joint(population, est.value, k, config.cache_size,
                                       config.list_size, config.tol);
      policy = std::move(joint.recommendation);
      caching = std::move(joint.caching);
    }

    const double obj_true =
        objective(caching.probabilities, policy, theta_true, population, k);

    for (int i = 0; i < config.requests_per_slot; ++i) {
      const int u = sample_user(population.activity, request_rng);
      const RequestObservation obs =
          generate_request(u, policy.lists[u], theta_true[u],
                           population.preference[u], config.list_size, request_rng);
      update_threshold(est, obs, population.preference);
    }

    int converged = 0;
    for (int u = 0; u < nu; ++u) {
      if (est.value[u] == run.effective_thresholds[u]) ++converged;
    }

    SlotRecord rec;
    rec.slot = t;
    rec.mode = explore ? SlotMode::kExploration : SlotMode::kExploitation;
    rec.epsilon = eps;
    rec.objective_true_theta = obj_true;
    rec.theta_hat = est.value;
    rec.fraction_converged = static_cast<double>(converged) / nu;
    run.slots.push_back(std::move(rec));

    if (converged == nu && run.convergence_slot < 0) run.convergence_slot = t;
    if (config.stop_when_converged && run.convergence_slot >= 0) {
      if (slots_after_convergence++ >= config.extra_slots_after_convergence) break;
    }
  }

  run.final_estimate = std::move(est);
  return run;
}

double convergence_bound(double epsilon, int n_contents, int list_size,
                         double min_support_pref, double requests_per_slot) {
  if (epsilon <= 0.0 || epsilon > 1.0) {
    throw std::invalid_argument("convergence_bound: epsilon must lie in (0,1]");
  }
  if (min_support_pref <= 0.0 || min_support_pref > 1.0) {
    throw std::invalid_argument("convergence_bound: rho must lie in (0,1]");
  }
  if (requests_per_slot < 1.0) {
    throw std::invalid_argument("convergence_bound: requests_per_slot must be >= 1");
  }
  const double nf = static_cast<double>(n_contents);
  const double nm = static_cast<double>(list_size);
  const double update_mass =
      nm - nm * std::pow(1.0 - min_support_pref / nm, requests_per_slot);
  return nf * nf / epsilon / update_mass;
}

double min_support_preference(const Vec& pref_row) {
  double rho = 1.0;
  bool any = false;
  for (double p : pref_row) {
    if (p > 0.0) {
      rho = std::min(rho, p);
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("min_support_preference: empty support");
  return rho;
}

}  // namespace cacherec

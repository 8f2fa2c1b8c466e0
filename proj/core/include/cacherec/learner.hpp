#pragma once

#include <cstdint>
#include <vector>

#include "cacherec/recopt.hpp"
#include "cacherec/reqsim.hpp"
#include "cacherec/rng.hpp"
#include "cacherec/types.hpp"

namespace cacherec {

struct ThresholdEstimate {
  Vec value;                 // theta-hat, starts at 1 and only decreases
  std::vector<long> updates; // per-user update counts

  static ThresholdEstimate initial(int n_users) {
    return ThresholdEstimate{Vec(n_users, 1.0), std::vector<long>(n_users, 0)};
  }
};

// A request witnessed from the list reveals theta_u <= p_uf, so the
// estimate drops to p_uf whenever it is still above.
void update_threshold(ThresholdEstimate& est, const RequestObservation& obs,
                      const Matrix& preference);

// Draws list_size contents uniformly without replacement from
// {f : p_uf < theta-hat_u}; a shortfall is topped up by descending p_uf.
RecommendationPolicy exploration_policy(const ThresholdEstimate& est,
                                        const UserPopulation& population,
                                        int list_size, Rng& rng);

struct EpsilonSchedule {
  enum class Kind { kConstant, kInverseTime };

  Kind kind = Kind::kConstant;
  double epsilon = 0.0;

  static EpsilonSchedule constant(double eps);
  static EpsilonSchedule inverse_time() {
    return EpsilonSchedule{Kind::kInverseTime, 0.0};
  }

  // Exploration probability for slot t >= 1.
  double at(long slot) const;
};

enum class SlotMode { kExploitation, kExploration };

struct SlotRecord {
  long slot = 0;
  SlotMode mode = SlotMode::kExploitation;
  double epsilon = 0.0;
  // analytic objective of the slot's policy evaluated under the TRUE
  // thresholds (ground-truth evaluation, free of radio-layer noise)
  double objective_true_theta = 0.0;
  Vec theta_hat;               // estimate after this slot's updates
  double fraction_converged = 0.0;  // share of users with theta-hat == effective threshold
};

struct LearningConfig {
  int cache_size = 1;
  int list_size = 1;
  EpsilonSchedule schedule;
  long n_slots = 1;
  int requests_per_slot = 1;  // N_q
  std::uint64_t seed = 0;
  double tol = 1e-9;
  // stop as soon as every user's estimate equals its effective threshold,
  // then run this many extra slots (0 = run all n_slots regardless)
  bool stop_when_converged = false;
  long extra_slots_after_convergence = 0;
};

struct LearningRun {
  std::vector<SlotRecord> slots;
  ThresholdEstimate final_estimate;
  Vec effective_thresholds;   // from the true thresholds
  long convergence_slot = -1; // first slot with all users converged, -1 if never
};

// Epsilon-greedy loop: exploit with Algorithm-1-style greedy on the
// estimate, or explore below the estimate; requests are simulated with the
// population's true thresholds and feed the estimate updates. Three
// independent seeded streams: mode draw, exploration lists, requests.
LearningRun run_learning(const UserPopulation& population, const SirConstants& k,
                         const LearningConfig& config);

// Mean-slots-to-convergence upper bound:
//   N_f^2 / eps / (N_m - N_m (1 - rho/N_m)^{N_q})
double convergence_bound(double epsilon, int n_contents, int list_size,
                         double min_support_pref, double requests_per_slot);

// rho_u = min over {f : p_uf > 0} of p_uf.
double min_support_preference(const Vec& pref_row);

}  // namespace cacherec

// Acceptance suite: one criterion per invocation (--criterion N) or all in
// sequence. Each criterion prints exactly one [PASS]/[FAIL] line; the exit
// code is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "cacherec/baselines.hpp"
#include "cacherec/learner.hpp"
#include "cacherec/netsim.hpp"
#include "cacherec/recopt.hpp"
#include "cacherec/reqsim.hpp"
#include "cacherec/synthetic.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"
#include "support/quadrature.hpp"

using namespace cacherec;

namespace {

NetworkParams reference_params() {
  return {1.0, 2, 3.76, std::pow(10.0, -0.8)};
}

// 1. Monte Carlo validation of the closed-form offload probability.
bool criterion1() {
  const SirConstants k = sir_constants(reference_params());
  for (double c : {0.1, 0.3, 0.5, 0.8, 1.0}) {
    DropConfig cfg;
    cfg.n_drops = 100000;
    cfg.cache_prob = c;
    cfg.params = reference_params();
    cfg.seed = 20260824 + static_cast<std::uint64_t>(100 * c);
    const DropOutcome out = simulate_offload(cfg);
    const double analytic = offload_success_prob(c, k);
    const double tol = std::max(3.0 * out.std_error, 0.01);
    if (std::fabs(out.probability - analytic) > tol) return false;
  }
  return true;
}

// 2. Closed-form constants against the adaptive-quadrature oracle.
bool criterion2() {
  for (double alpha : {3.0, 3.76, 4.0}) {
    for (int nt : {1, 2, 4}) {
      for (double gamma0 : {0.05, 0.158, 1.0, 5.0}) {
        const SirConstants k = sir_constants({1.0, nt, alpha, gamma0});
        const auto oracle = testsupport::radial_constants(alpha, nt, gamma0);
        if (std::fabs(k.g1 - oracle.g1) > 1e-8 * std::fabs(oracle.g1)) return false;
        if (std::fabs(k.g2 - oracle.g2) > 1e-8 * std::fabs(oracle.g2)) return false;
      }
    }
  }
  return true;
}

// 3. Caching optimality against random policies and a fine grid search.
bool criterion3() {
  const SirConstants k = sir_constants(reference_params());
  Rng rng(33001);
  for (int trial = 0; trial < 100; ++trial) {
    const int nf = 3 + rng.uniform_int(48);  // up to 50
    const int nc = 1 + rng.uniform_int(nf - 1);
    const Vec pi = testsupport::random_simplex(nf, rng);
    const auto policy = optimal_caching(pi, k, nc);
    const double opt = objective_from_popularity(policy.probabilities, pi, k);
    for (int r = 0; r < 200; ++r) {
      const Vec other = testsupport::random_feasible_policy(nf, nc, rng);
      if (opt < objective_from_popularity(other, pi, k) - 1e-9) return false;
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const int nf = 3 + rng.uniform_int(4);  // up to 6
    const int nc = 1 + rng.uniform_int(nf - 1);
    const Vec pi = testsupport::random_simplex(nf, rng);
    const auto policy = optimal_caching(pi, k, nc);
    const Vec oracle = testsupport::grid_search_caching(pi, k, nc, 1e-3);
    for (int f = 0; f < nf; ++f) {
      if (std::fabs(policy.probabilities[f] - oracle[f]) > 1e-3) return false;
    }
  }
  return true;
}

// 4. Greedy near-optimality on exhaustively searchable instances.
bool criterion4() {
  const SirConstants k = sir_constants(reference_params());
  for (int trial = 0; trial < 20; ++trial) {
    const auto pop = testsupport::random_population(2, 6, 44000 + trial, 0.4);
    const Vec& theta = *pop.thresholds;
    const auto joint = greedy_joint(pop, theta, k, 2, 2);
    const double opt = testsupport::exhaustive_joint_optimum(pop, theta, k, 2, 2);
    if (joint.achieved_objective < 0.98 * opt) return false;
  }
  return true;
}

// 5. Policy ordering on the synthetic instance across cache sizes.
bool criterion5() {
  const SirConstants k = sir_constants(reference_params());
  SyntheticSpec spec;
  spec.n_users = 50;
  spec.n_contents = 100;
  spec.theta_max = 4.0 / 100.0;
  spec.seed = 1;
  const UserPopulation pop = make_zipf_population(spec);
  const Vec& theta = *pop.thresholds;
  for (int nc : {5, 10, 20, 40}) {
    const double alg1 = greedy_joint(pop, theta, k, nc, 5).achieved_objective;
    const double b1 =
        baseline_rec_up_cache_pop_rec_adj(pop, theta, k, nc, 5).achieved_objective;
    const double b2 =
        baseline_rec_pop_cache_pop(pop, theta, k, nc, 5).achieved_objective;
    const double b3 =
        baseline_cache_opt_rec_up(pop, theta, k, nc, 5).achieved_objective;
    const double b4 = baseline_cache_opt_no_rec(pop, k, nc).achieved_objective;
    if (!(alg1 > b1 && alg1 > b2 && alg1 > b3 && alg1 > b4)) return false;
    if (!(alg1 - b4 > 0.0)) return false;
  }
  return true;
}

// 6. Request-simulator marginals against the demand model.
bool criterion6() {
  Rng meta(66001);
  for (int trial = 0; trial < 10; ++trial) {
    const int nf = 4 + meta.uniform_int(5);
    const int nm = 1 + meta.uniform_int(2);
    const Vec p = testsupport::random_simplex(nf, meta);
    const double theta = 0.5 * meta.uniform();
    std::vector<int> list;
    while (static_cast<int>(list.size()) < nm) {
      const int f = meta.uniform_int(nf);
      if (std::find(list.begin(), list.end(), f) == list.end()) list.push_back(f);
    }
    std::sort(list.begin(), list.end());

    const Vec q = post_rec_preference(list, nm, theta, p);
    const long draws = 1000000;
    std::vector<long> counts(nf, 0);
    Rng rng(66100 + trial);
    for (long i = 0; i < draws; ++i) {
      ++counts[generate_request(0, list, theta, p, nm, rng).content];
    }
    for (int f = 0; f < nf; ++f) {
      const double freq = static_cast<double>(counts[f]) / draws;
      const double sigma = std::sqrt(std::max(q[f] * (1.0 - q[f]), 1e-12) / draws);
      if (std::fabs(freq - q[f]) > 3.0 * sigma + 1e-9) return false;
    }
  }
  return true;
}

// 7. Learner convergence within the analytic bound, oracle-level
// post-convergence performance, and the pure-exploitation stall.
bool criterion7() {
  const SirConstants k = sir_constants(reference_params());
  const double eps = 0.1;
  const int nf = 20, nu = 5, nm = 5, nc = 4, nq = 200;

  // preference floor keeps rho_u, and with it the bound, reasonable
  Rng build(77001);
  UserPopulation pop;
  pop.n_users = nu;
  pop.activity = testsupport::random_simplex(nu, build, 0.5);
  for (int u = 0; u < nu; ++u) {
    pop.preference.push_back(testsupport::random_simplex(nf, build, 0.15));
  }
  Vec theta(nu);
  for (double& t : theta) t = 0.12 * build.uniform();
  pop.thresholds = theta;

  double bound = 0.0;
  for (int u = 0; u < nu; ++u) {
    const double rho = min_support_preference(pop.preference[u]);
    const double nq_u = static_cast<double>(nq) * pop.activity[u];
    bound = std::max(bound, convergence_bound(eps, nf, nm, rho, nq_u));
  }

  LearningConfig cfg;
  cfg.cache_size = nc;
  cfg.list_size = nm;
  cfg.schedule = EpsilonSchedule::constant(eps);
  cfg.n_slots = static_cast<long>(std::ceil(bound));
  cfg.requests_per_slot = nq;
  cfg.stop_when_converged = true;
  cfg.extra_slots_after_convergence = 5;

  const auto oracle = greedy_joint(pop, theta, k, nc, nm);
  int converged = 0;
  for (int r = 0; r < 100; ++r) {
    cfg.seed = 77100 + r;
    const auto run = run_learning(pop, k, cfg);
    if (run.convergence_slot < 0 ||
        static_cast<double>(run.convergence_slot) > bound) {
      continue;
    }
    ++converged;
    // post-convergence exploitation slots must average at least (1-eps)
    // of the oracle objective
    double sum = 0.0;
    long n = 0;
    for (const auto& slot : run.slots) {
      if (slot.slot > run.convergence_slot && slot.mode == SlotMode::kExploitation) {
        sum += slot.objective_true_theta;
        ++n;
      }
    }
    if (n > 0 && sum / n < (1.0 - eps) * oracle.achieved_objective - 1e-6) {
      return false;
    }
  }
  if (converged < 95) return false;

  // constructed stall: pure exploitation keeps recommending the top
  // content, so the estimate never reaches the effective threshold
  UserPopulation stall;
  stall.n_users = 1;
  stall.activity = {1.0};
  stall.preference = {{0.4, 0.3, 0.2, 0.1}};
  stall.thresholds = Vec{0.15};  // effective threshold 0.2

  LearningConfig zero;
  zero.cache_size = 1;
  zero.list_size = 1;
  zero.schedule = EpsilonSchedule::constant(0.0);
  zero.n_slots = 500;
  zero.requests_per_slot = 40;
  zero.seed = 77999;
  const auto run = run_learning(stall, k, zero);
  bool stalled = false;
  for (int u = 0; u < stall.n_users; ++u) {
    if (run.final_estimate.value[u] > run.effective_thresholds[u]) stalled = true;
  }
  return stalled && run.convergence_slot == -1;
}

// 8. Normalization across randomized demand instances.
bool criterion8() {
  Rng rng(88001);
  for (int trial = 0; trial < 1000; ++trial) {
    const int nu = 1 + rng.uniform_int(6);
    const int nf = 2 + rng.uniform_int(12);
    const int nm = 1 + rng.uniform_int(std::min(nf, 4));
    const auto pop = testsupport::random_population(nu, nf, 88100 + trial,
                                                    rng.uniform());
    double vsum = 0.0;
    for (double v : pop.activity) vsum += v;
    if (std::fabs(vsum - 1.0) > 1e-9) return false;

    Rng lists(rng.next_u64());
    const auto policy = testsupport::random_policy(pop, nm, lists);
    const auto demand = demand_after_rec(policy, *pop.thresholds, pop);
    for (int u = 0; u < nu; ++u) {
      double qsum = 0.0;
      for (double q : demand.q[u]) qsum += q;
      if (std::fabs(qsum - 1.0) > 1e-9) return false;
    }
    const Vec pi = popularity_after_rec(policy, *pop.thresholds, pop);
    double psum = 0.0;
    for (double x : pi) psum += x;
    if (std::fabs(psum - 1.0) > 1e-9) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc - 1; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);
  }

  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8};
  int failures = 0;
  for (int n = 1; n <= 8; ++n) {
    if (only != 0 && n != only) continue;
    const bool ok = criteria[n - 1]();
    std::printf("[%s] criterion %d\n", ok ? "PASS" : "FAIL", n);
    if (!ok) ++failures;
  }
  return failures;
}

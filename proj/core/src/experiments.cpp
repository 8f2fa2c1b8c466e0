#include "cacherec/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cacherec/baselines.hpp"
#include "cacherec/netsim.hpp"
#include "cacherec/synthetic.hpp"

namespace cacherec {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Vec draw_thresholds(int n_users, double theta_max, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, 3);
  Vec t(n_users);
  for (double& x : t) x = theta_max * rng.uniform();
  return t;
}

}  // namespace

void write_population_json(const UserPopulation& population, std::ostream& out) {
  nlohmann::json j;
  j["n_users"] = population.n_users;
  j["n_contents"] = population.n_contents();
  j["activity"] = population.activity;
  j["preference"] = population.preference;
  if (population.thresholds) j["thresholds"] = *population.thresholds;
  out << j.dump(1) << "\n";
}

UserPopulation read_population_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  UserPopulation pop;
  pop.n_users = j.at("n_users").get<int>();
  pop.activity = j.at("activity").get<Vec>();
  pop.preference = j.at("preference").get<Matrix>();
  if (j.contains("thresholds")) pop.thresholds = j.at("thresholds").get<Vec>();
  if (pop.n_contents() != j.at("n_contents").get<int>()) {
    throw std::runtime_error("population json: n_contents mismatch");
  }
  pop.validate();
  return pop;
}

UserPopulation read_population_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("population: cannot open " + path);
  return read_population_json(in);
}

UserPopulation load_population(const ExperimentConfig& cfg, double theta_max) {
  UserPopulation pop;
  if (cfg.dataset_kind == "synthetic") {
    SyntheticSpec spec;
    spec.n_users = cfg.n_users;
    spec.n_contents = cfg.n_contents;
    spec.zipf_exponent = cfg.zipf_exponent;
    spec.dirichlet_scale = cfg.dirichlet_scale;
    spec.theta_max = theta_max >= 0.0 ? theta_max : cfg.resolved_theta_max();
    spec.seed = cfg.seed;
    return make_zipf_population(spec);
  }
  pop = read_population_file(cfg.dataset_path);
  if (theta_max >= 0.0 || !pop.thresholds) {
    const double tmax = theta_max >= 0.0 ? theta_max : cfg.resolved_theta_max();
    pop.thresholds = draw_thresholds(pop.n_users, tmax, cfg.seed);
  }
  pop.validate();
  return pop;
}

int cmd_validate_sir(const ExperimentConfig& cfg, std::ostream& csv) {
  cfg.validate();
  const NetworkParams params = cfg.network();
  const SirConstants k = sir_constants(params);

  csv << "c_f,analytic,empirical,std_err,within_tolerance\n";
  int failures = 0;
  for (std::size_t i = 0; i < cfg.cache_prob_grid.size(); ++i) {
    const double c = cfg.cache_prob_grid[i];
    const double analytic = offload_success_prob(c, k);
    DropConfig drop;
    drop.window_radius = cfg.window_radius;
    drop.n_drops = cfg.n_drops;
    drop.cache_prob = c;
    drop.params = params;
    drop.seed = cfg.seed + i;
    const DropOutcome out = simulate_offload(drop);
    const double tol = std::max(3.0 * out.std_error, 0.01);
    const bool ok = std::fabs(analytic - out.probability) <= tol;
    if (!ok) ++failures;
    csv << num(c) << ',' << num(analytic) << ',' << num(out.probability) << ','
        << num(out.std_error) << ',' << (ok ? "true" : "false") << '\n';
  }
  return failures == 0 ? 0 : 1;
}

namespace {

void policy_row(std::ostream& csv, const UserPopulation& pop, const SirConstants& k,
                int cache_size, int list_size) {
  const Vec& theta = *pop.thresholds;
  const JointPolicy alg1 = greedy_joint(pop, theta, k, cache_size, list_size);
  const JointPolicy b1 =
      baseline_rec_up_cache_pop_rec_adj(pop, theta, k, cache_size, list_size);
  const JointPolicy b2 = baseline_rec_pop_cache_pop(pop, theta, k, cache_size, list_size);
  const JointPolicy b3 = baseline_cache_opt_rec_up(pop, theta, k, cache_size, list_size);
  const JointPolicy b4 = baseline_cache_opt_no_rec(pop, k, cache_size);
  csv << num(alg1.achieved_objective) << ',' << num(b1.achieved_objective) << ','
      << num(b2.achieved_objective) << ',' << num(b3.achieved_objective) << ','
      << num(b4.achieved_objective) << '\n';
}

}  // namespace

int cmd_sweep_cache_size(const ExperimentConfig& cfg, std::ostream& csv) {
  cfg.validate();
  const SirConstants k = sir_constants(cfg.network());
  const UserPopulation pop = load_population(cfg, cfg.resolved_theta_max());

  csv << "cache_size,alg1,baseline1,baseline2,baseline3,baseline4\n";
  for (int nc : cfg.cache_size_grid) {
    csv << nc << ',';
    policy_row(csv, pop, k, nc, cfg.list_size);
  }
  return 0;
}

int cmd_sweep_threshold(const ExperimentConfig& cfg, std::ostream& csv) {
  cfg.validate();
  const SirConstants k = sir_constants(cfg.network());

  const double lo = 0.01 / cfg.n_contents;
  // thresholds live in [0,1]; small catalogs would push 50/N_f past that
  const double hi = std::min(50.0 / cfg.n_contents, 1.0);
  csv << "theta_max,alg1,baseline1,baseline2,baseline3,baseline4\n";
  for (int i = 0; i < cfg.threshold_sweep_points; ++i) {
    const double frac = static_cast<double>(i) / (cfg.threshold_sweep_points - 1);
    const double tmax = lo * std::pow(hi / lo, frac);
    const UserPopulation pop = load_population(cfg, tmax);
    csv << num(tmax) << ',';
    policy_row(csv, pop, k, cfg.cache_size, cfg.list_size);
  }
  return 0;
}

int cmd_learn(const ExperimentConfig& cfg, std::ostream& csv) {
  cfg.validate();
  const SirConstants k = sir_constants(cfg.network());
  const UserPopulation pop = load_population(cfg, cfg.resolved_theta_max());
  const JointPolicy oracle =
      greedy_joint(pop, *pop.thresholds, k, cfg.cache_size, cfg.list_size);

  csv << "schedule,slot,epsilon,mode,objective_true_theta,oracle_objective,"
         "fraction_users_converged\n";
  for (const auto& label : cfg.schedules) {
    LearningConfig lc;
    lc.cache_size = cfg.cache_size;
    lc.list_size = cfg.list_size;
    lc.schedule = parse_schedule(label);
    lc.n_slots = cfg.n_slots;
    lc.requests_per_slot = cfg.requests_per_slot;
    lc.seed = cfg.seed;
    const LearningRun run = run_learning(pop, k, lc);
    for (const SlotRecord& rec : run.slots) {
      csv << label << ',' << rec.slot << ',' << num(rec.epsilon) << ','
          << (rec.mode == SlotMode::kExploration ? "exploration" : "exploitation")
          << ',' << num(rec.objective_true_theta) << ','
          << num(oracle.achieved_objective) << ',' << num(rec.fraction_converged)
          << '\n';
    }
  }
  return 0;
}

int cmd_bound(const ExperimentConfig& cfg, std::ostream& report) {
  cfg.validate();
  const SirConstants k = sir_constants(cfg.network());
  const UserPopulation pop = load_population(cfg, cfg.resolved_theta_max());

  // first strictly positive constant schedule, else 0.1
  double epsilon = 0.1;
  for (const auto& label : cfg.schedules) {
    const EpsilonSchedule s = parse_schedule(label);
    if (s.kind == EpsilonSchedule::Kind::kConstant && s.epsilon > 0.0) {
      epsilon = s.epsilon;
      break;
    }
  }

  const int n_runs = 10;
  std::vector<Vec> slots_to_converge(pop.n_users);
  for (int r = 0; r < n_runs; ++r) {
    LearningConfig lc;
    lc.cache_size = cfg.cache_size;
    lc.list_size = cfg.list_size;
    lc.schedule = EpsilonSchedule::constant(epsilon);
    lc.n_slots = cfg.n_slots;
    lc.requests_per_slot = cfg.requests_per_slot;
    lc.seed = cfg.seed + 100 + r;
    lc.stop_when_converged = true;
    const LearningRun run = run_learning(pop, k, lc);
    for (int u = 0; u < pop.n_users; ++u) {
      long first = cfg.n_slots;  // censored at the horizon when never converged
      for (const SlotRecord& rec : run.slots) {
        if (rec.theta_hat[u] == run.effective_thresholds[u]) {
          first = rec.slot;
          break;
        }
      }
      slots_to_converge[u].push_back(static_cast<double>(first));
    }
  }

  report << "user,rho,mean_requests_per_slot,bound,empirical_mean_slots,ok\n";
  int failures = 0;
  for (int u = 0; u < pop.n_users; ++u) {
    const double rho = min_support_preference(pop.preference[u]);
    const double nq = cfg.requests_per_slot * pop.activity[u];
    const double bound =
        convergence_bound(epsilon, pop.n_contents(), cfg.list_size, rho,
                          std::max(1.0, nq));
    double mean = 0.0;
    for (double s : slots_to_converge[u]) mean += s;
    mean /= slots_to_converge[u].size();
    const bool ok = mean <= bound;
    if (!ok) ++failures;
    report << u << ',' << num(rho) << ',' << num(nq) << ',' << num(bound) << ','
           << num(mean) << ',' << (ok ? "true" : "false") << '\n';
  }
  return failures == 0 ? 0 : 1;
}

int cmd_ingest(const std::string& log_path, std::size_t k_users,
               std::size_t k_contents, std::ostream& out) {
  const RequestLog log = read_request_log_file(log_path);
  const RequestLog filtered = top_k_filter(log, k_users, k_contents);
  EstimatedInstance inst = estimate_from_log(filtered);
  inst.population.validate();

  nlohmann::json j;
  j["n_users"] = inst.population.n_users;
  j["n_contents"] = inst.population.n_contents();
  j["activity"] = inst.population.activity;
  j["preference"] = inst.population.preference;
  j["user_ids"] = inst.user_ids;
  j["content_ids"] = inst.content_ids;
  out << j.dump(1) << "\n";
  return 0;
}

}  // namespace cacherec

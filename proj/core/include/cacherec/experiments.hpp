#pragma once

#include <iosfwd>
#include <string>

#include "cacherec/catalog.hpp"
#include "cacherec/config.hpp"

namespace cacherec {

// JSON on disk: n_users, n_contents, activity, preference, optional
// thresholds. Produced by `ingest`, consumed by dataset_kind=population.
void write_population_json(const UserPopulation& population, std::ostream& out);
UserPopulation read_population_json(std::istream& in);
UserPopulation read_population_file(const std::string& path);

// Population per the config: synthetic Zipf instance or a population file.
// Thresholds are drawn U[0, theta_max] from the config seed when the
// source provides none; theta_max overrides the stored draw when given.
UserPopulation load_population(const ExperimentConfig& cfg, double theta_max);

// Each command writes one CSV (header row, '.' decimal, no locale) and
// returns 0 on success. A nonzero return marks a violated invariant.

// rows: c_f, analytic, empirical, std_err, within_tolerance
int cmd_validate_sir(const ExperimentConfig& cfg, std::ostream& csv);

// rows: cache_size, alg1, baseline1, baseline2, baseline3, baseline4
int cmd_sweep_cache_size(const ExperimentConfig& cfg, std::ostream& csv);

// rows over a log grid of theta_max in [0.01/N_f, 50/N_f], same columns
int cmd_sweep_threshold(const ExperimentConfig& cfg, std::ostream& csv);

// rows: schedule, slot, epsilon, mode, objective_true_theta,
//       oracle_objective, fraction_users_converged
int cmd_learn(const ExperimentConfig& cfg, std::ostream& csv);

// Per-user convergence bound vs empirical mean convergence slot over
// seeded learning runs; fails when the empirical mean exceeds the bound.
int cmd_bound(const ExperimentConfig& cfg, std::ostream& report);

// Reads a play-count log, keeps the top-k users/contents, estimates the
// population, writes it as population JSON.
int cmd_ingest(const std::string& log_path, std::size_t k_users,
               std::size_t k_contents, std::ostream& out);

}  // namespace cacherec

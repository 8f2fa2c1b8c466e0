#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cacherec/learner.hpp"
#include "cacherec/sgeom.hpp"

namespace cacherec {

// Flat key-value experiment configuration with sections. Unknown sections
// or keys are rejected at parse time; every field is validated against the
// consuming module's preconditions before any computation starts.
struct ExperimentConfig {
  // [network]
  double alpha = 3.76;
  int n_antennas = 2;
  double gamma0_db = -8.0;  // converted to linear once, at this boundary
  double density = 1.0;

  // [sizes]
  int n_users = 50;
  int n_contents = 100;
  int cache_size = 10;
  std::vector<int> cache_size_grid = {5, 10, 20, 40};
  int list_size = 5;

  // [threshold]
  double theta_max = -1.0;  // negative selects the default 4 / n_contents
  int threshold_sweep_points = 8;

  // [dataset]
  std::string dataset_kind = "synthetic";  // "synthetic" or "population"
  std::string dataset_path;
  double zipf_exponent = 0.8;
  double dirichlet_scale = 5.0;

  // [learner]
  std::vector<std::string> schedules = {"0", "0.01", "0.1", "1/t"};
  long n_slots = 300;
  int requests_per_slot = 200;

  // [sim]
  long n_drops = 100000;
  double window_radius = 0.0;  // 0 = default window rule
  std::vector<double> cache_prob_grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                         0.6, 0.7, 0.8, 0.9, 1.0};

  // [run]
  std::uint64_t seed = 1;
  std::string output_dir = ".";

  double resolved_theta_max() const {
    // the default 4/N_f is capped for very small catalogs
    return theta_max >= 0.0 ? theta_max : std::min(4.0 / n_contents, 1.0);
  }
  NetworkParams network() const {
    return NetworkParams{density, n_antennas, alpha, db_to_linear(gamma0_db)};
  }
  void validate() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);
void write_config(const ExperimentConfig& cfg, std::ostream& out);

// "0.1" -> constant, "1/t" -> inverse-time.
EpsilonSchedule parse_schedule(const std::string& text);

}  // namespace cacherec

// Experiment runner: reproduces the offloading experiments at desk scale
// and emits CSVs for plotting. See README.md for the config schema.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cacherec/experiments.hpp"

namespace {

using cacherec::ExperimentConfig;

struct Overrides {
  std::optional<double> alpha, gamma0_db, density, theta_max, zipf_exponent,
      dirichlet_scale, window_radius;
  std::optional<int> n_antennas, n_users, n_contents, cache_size, list_size,
      sweep_points, requests_per_slot;
  std::optional<long> n_slots, n_drops;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache_size_grid, cache_prob_grid, schedules,
      dataset_kind, dataset_path, output_dir;
};

template <typename T>
void apply(const std::optional<T>& src, T& dst) {
  if (src) dst = *src;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

ExperimentConfig resolve(const std::string& config_path, const Overrides& ov) {
  ExperimentConfig cfg;
  if (!config_path.empty()) cfg = cacherec::parse_config_file(config_path);
  apply(ov.alpha, cfg.alpha);
  apply(ov.n_antennas, cfg.n_antennas);
  apply(ov.gamma0_db, cfg.gamma0_db);
  apply(ov.density, cfg.density);
  apply(ov.n_users, cfg.n_users);
  apply(ov.n_contents, cfg.n_contents);
  apply(ov.cache_size, cfg.cache_size);
  apply(ov.list_size, cfg.list_size);
  apply(ov.theta_max, cfg.theta_max);
  apply(ov.sweep_points, cfg.threshold_sweep_points);
  apply(ov.dataset_kind, cfg.dataset_kind);
  apply(ov.dataset_path, cfg.dataset_path);
  apply(ov.zipf_exponent, cfg.zipf_exponent);
  apply(ov.dirichlet_scale, cfg.dirichlet_scale);
  apply(ov.n_slots, cfg.n_slots);
  apply(ov.requests_per_slot, cfg.requests_per_slot);
  apply(ov.n_drops, cfg.n_drops);
  apply(ov.window_radius, cfg.window_radius);
  apply(ov.seed, cfg.seed);
  apply(ov.output_dir, cfg.output_dir);
  if (ov.schedules) cfg.schedules = split_csv(*ov.schedules);
  if (ov.cache_size_grid) {
    cfg.cache_size_grid.clear();
    for (const auto& item : split_csv(*ov.cache_size_grid)) {
      cfg.cache_size_grid.push_back(std::stoi(item));
    }
  }
  if (ov.cache_prob_grid) {
    cfg.cache_prob_grid.clear();
    for (const auto& item : split_csv(*ov.cache_prob_grid)) {
      cfg.cache_prob_grid.push_back(std::stod(item));
    }
  }
  cfg.validate();
  return cfg;
}

int run_to_csv(const ExperimentConfig& cfg, const std::string& name,
               int (*command)(const ExperimentConfig&, std::ostream&)) {
  std::filesystem::create_directories(cfg.output_dir);
  const auto path = std::filesystem::path(cfg.output_dir) / name;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 1;
  }
  const int rc = command(cfg, out);
  std::cout << "wrote " << path.string() << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint content caching and recommendation experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  Overrides ov;
  app.add_option("--config", config_path, "Config file; flags override its values");
  app.add_option("--alpha", ov.alpha, "Pathloss exponent (> 2)");
  app.add_option("--n-antennas", ov.n_antennas, "BS antennas N_t");
  app.add_option("--gamma0-db", ov.gamma0_db, "SIR threshold in dB");
  app.add_option("--density", ov.density, "BS density (per unit area)");
  app.add_option("--n-users", ov.n_users, "Number of users N_u");
  app.add_option("--n-contents", ov.n_contents, "Catalog size N_f");
  app.add_option("--cache-size", ov.cache_size, "Cache budget N_c");
  app.add_option("--cache-size-grid", ov.cache_size_grid,
                 "Comma list of N_c values for the cache-size sweep");
  app.add_option("--list-size", ov.list_size, "Recommendation list size N_m");
  app.add_option("--theta-max", ov.theta_max,
                 "Threshold draw upper bound (negative = 4/N_f)");
  app.add_option("--sweep-points", ov.sweep_points, "Threshold sweep grid points");
  app.add_option("--dataset-kind", ov.dataset_kind, "synthetic | population");
  app.add_option("--dataset-path", ov.dataset_path, "Population JSON path");
  app.add_option("--zipf-exponent", ov.zipf_exponent, "Synthetic Zipf exponent");
  app.add_option("--dirichlet-scale", ov.dirichlet_scale,
                 "Synthetic per-user perturbation concentration");
  app.add_option("--schedules", ov.schedules,
                 "Comma list of epsilon schedules, e.g. 0,0.01,0.1,1/t");
  app.add_option("--n-slots", ov.n_slots, "Learning slots");
  app.add_option("--requests-per-slot", ov.requests_per_slot, "Requests per slot N_q");
  app.add_option("--n-drops", ov.n_drops, "Monte Carlo drops");
  app.add_option("--window-radius", ov.window_radius,
                 "Simulation window radius (0 = auto)");
  app.add_option("--seed", ov.seed, "Master seed");
  app.add_option("--output-dir", ov.output_dir, "Output directory for CSVs");

  auto* validate = app.add_subcommand("validate-sir",
      "Monte Carlo validation of the closed-form offload probability");
  auto* sweep_nc = app.add_subcommand("sweep-cache-size",
      "Offloading probability vs cache size, all policies");
  auto* sweep_theta = app.add_subcommand("sweep-threshold",
      "Offloading probability vs threshold upper bound, all policies");
  auto* learn = app.add_subcommand("learn",
      "Epsilon-greedy threshold learning traces");
  auto* bound = app.add_subcommand("bound",
      "Convergence bound vs empirical convergence slots");

  auto* ingest = app.add_subcommand("ingest",
      "Estimate a population from a play-count log");
  std::string log_path, ingest_out;
  std::size_t k_users = 50, k_contents = 100;
  ingest->add_option("--log", log_path, "Play-count log (user,content,count per line)")
      ->required();
  ingest->add_option("--k-users", k_users, "Keep the top-k active users");
  ingest->add_option("--k-contents", k_contents, "Keep the top-k listened contents");
  ingest->add_option("--out", ingest_out, "Output population JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) {
      std::ofstream out(ingest_out);
      if (!out) {
        std::cerr << "cannot write " << ingest_out << "\n";
        return 1;
      }
      const int rc = cacherec::cmd_ingest(log_path, k_users, k_contents, out);
      std::cout << "wrote " << ingest_out << "\n";
      return rc;
    }

    const ExperimentConfig cfg = resolve(config_path, ov);
    if (validate->parsed()) {
      return run_to_csv(cfg, "validate_sir.csv", cacherec::cmd_validate_sir);
    }
    if (sweep_nc->parsed()) {
      return run_to_csv(cfg, "sweep_cache_size.csv", cacherec::cmd_sweep_cache_size);
    }
    if (sweep_theta->parsed()) {
      return run_to_csv(cfg, "sweep_threshold.csv", cacherec::cmd_sweep_threshold);
    }
    if (learn->parsed()) {
      return run_to_csv(cfg, "learn.csv", cacherec::cmd_learn);
    }
    if (bound->parsed()) {
      std::filesystem::create_directories(cfg.output_dir);
      const auto path = std::filesystem::path(cfg.output_dir) / "bound.csv";
      std::ofstream out(path);
      const int rc = cacherec::cmd_bound(cfg, out);
      std::cout << "wrote " << path.string() << "\n";
      if (rc != 0) std::cerr << "bound violated: see " << path.string() << "\n";
      return rc;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

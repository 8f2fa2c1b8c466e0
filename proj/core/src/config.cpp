#include "cacherec/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cacherec {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad number for '" + key + "': " + s);
  }
}

long parse_long(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad integer for '" + key + "': " + s);
  }
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  network().validate();  // alpha > 2, N_t >= 1, gamma0 > 0, density > 0
  if (n_users < 1 || n_contents < 1) {
    throw std::runtime_error("config: n_users and n_contents must be >= 1");
  }
  if (cache_size < 1 || cache_size > n_contents) {
    throw std::runtime_error("config: cache_size out of range");
  }
  for (int nc : cache_size_grid) {
    if (nc < 1 || nc > n_contents) {
      throw std::runtime_error("config: cache_size_grid entry out of range");
    }
  }
  if (list_size < 1 || list_size > n_contents) {
    throw std::runtime_error("config: list_size out of range");
  }
  if (resolved_theta_max() > 1.0) {
    throw std::runtime_error("config: theta_max exceeds 1");
  }
  if (threshold_sweep_points < 2) {
    throw std::runtime_error("config: threshold_sweep_points must be >= 2");
  }
  if (dataset_kind != "synthetic" && dataset_kind != "population") {
    throw std::runtime_error("config: dataset_kind must be synthetic or population");
  }
  if (dataset_kind == "population" && dataset_path.empty()) {
    throw std::runtime_error("config: dataset_path required for dataset_kind=population");
  }
  if (schedules.empty()) throw std::runtime_error("config: no learner schedules");
  for (const auto& s : schedules) (void)parse_schedule(s);
  if (n_slots < 1) throw std::runtime_error("config: n_slots must be >= 1");
  if (requests_per_slot < 1) {
    throw std::runtime_error("config: requests_per_slot must be >= 1");
  }
  if (n_drops < 1) throw std::runtime_error("config: n_drops must be >= 1");
  if (window_radius < 0.0) throw std::runtime_error("config: negative window_radius");
  for (double c : cache_prob_grid) {
    if (c < 0.0 || c > 1.0) {
      throw std::runtime_error("config: cache_prob_grid entry outside [0,1]");
    }
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::runtime_error("config: malformed section on line " + std::to_string(lineno));
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "network" && section != "sizes" && section != "threshold" &&
          section != "dataset" && section != "learner" && section != "sim" &&
          section != "run") {
        throw std::runtime_error("config: unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: expected key = value on line " + std::to_string(lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string qual = section + "." + key;

    if (qual == "network.alpha") cfg.alpha = parse_double(value, qual);
    else if (qual == "network.n_antennas") cfg.n_antennas = static_cast<int>(parse_long(value, qual));
    else if (qual == "network.gamma0_db") cfg.gamma0_db = parse_double(value, qual);
    else if (qual == "network.density") cfg.density = parse_double(value, qual);
    else if (qual == "sizes.n_users") cfg.n_users = static_cast<int>(parse_long(value, qual));
    else if (qual == "sizes.n_contents") cfg.n_contents = static_cast<int>(parse_long(value, qual));
    else if (qual == "sizes.cache_size") cfg.cache_size = static_cast<int>(parse_long(value, qual));
    else if (qual == "sizes.cache_size_grid") {
      cfg.cache_size_grid.clear();
      for (const auto& item : split_list(value)) {
        cfg.cache_size_grid.push_back(static_cast<int>(parse_long(item, qual)));
      }
    } else if (qual == "sizes.list_size") cfg.list_size = static_cast<int>(parse_long(value, qual));
    else if (qual == "threshold.theta_max") cfg.theta_max = parse_double(value, qual);
    else if (qual == "threshold.sweep_points") cfg.threshold_sweep_points = static_cast<int>(parse_long(value, qual));
    else if (qual == "dataset.kind") cfg.dataset_kind = value;
    else if (qual == "dataset.path") cfg.dataset_path = value;
    else if (qual == "dataset.zipf_exponent") cfg.zipf_exponent = parse_double(value, qual);
    else if (qual == "dataset.dirichlet_scale") cfg.dirichlet_scale = parse_double(value, qual);
    else if (qual == "learner.schedules") cfg.schedules = split_list(value);
    else if (qual == "learner.n_slots") cfg.n_slots = parse_long(value, qual);
    else if (qual == "learner.requests_per_slot") cfg.requests_per_slot = static_cast<int>(parse_long(value, qual));
    else if (qual == "sim.n_drops") cfg.n_drops = parse_long(value, qual);
    else if (qual == "sim.window_radius") cfg.window_radius = parse_double(value, qual);
    else if (qual == "sim.cache_prob_grid") {
      cfg.cache_prob_grid.clear();
      for (const auto& item : split_list(value)) {
        cfg.cache_prob_grid.push_back(parse_double(item, qual));
      }
    } else if (qual == "run.seed") cfg.seed = static_cast<std::uint64_t>(parse_long(value, qual));
    else if (qual == "run.output_dir") cfg.output_dir = value;
    else throw std::runtime_error("config: unknown key '" + qual + "'");
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  return parse_config(in);
}

void write_config(const ExperimentConfig& cfg, std::ostream& out) {
  out << "[network]\n";
  out << "alpha = " << fmt_double(cfg.alpha) << "\n";
  out << "n_antennas = " << cfg.n_antennas << "\n";
  out << "gamma0_db = " << fmt_double(cfg.gamma0_db) << "\n";
  out << "density = " << fmt_double(cfg.density) << "\n";
  out << "\n[sizes]\n";
  out << "n_users = " << cfg.n_users << "\n";
  out << "n_contents = " << cfg.n_contents << "\n";
  out << "cache_size = " << cfg.cache_size << "\n";
  out << "cache_size_grid = ";
  for (std::size_t i = 0; i < cfg.cache_size_grid.size(); ++i) {
    out << (i ? "," : "") << cfg.cache_size_grid[i];
  }
  out << "\nlist_size = " << cfg.list_size << "\n";
  out << "\n[threshold]\n";
  out << "theta_max = " << fmt_double(cfg.theta_max) << "\n";
  out << "sweep_points = " << cfg.threshold_sweep_points << "\n";
  out << "\n[dataset]\n";
  out << "kind = " << cfg.dataset_kind << "\n";
  out << "path = " << cfg.dataset_path << "\n";
  out << "zipf_exponent = " << fmt_double(cfg.zipf_exponent) << "\n";
  out << "dirichlet_scale = " << fmt_double(cfg.dirichlet_scale) << "\n";
  out << "\n[learner]\n";
  out << "schedules = ";
  for (std::size_t i = 0; i < cfg.schedules.size(); ++i) {
    out << (i ? "," : "") << cfg.schedules[i];
  }
  out << "\nn_slots = " << cfg.n_slots << "\n";
  out << "requests_per_slot = " << cfg.requests_per_slot << "\n";
  out << "\n[sim]\n";
  out << "n_drops = " << cfg.n_drops << "\n";
  out << "window_radius = " << fmt_double(cfg.window_radius) << "\n";
  out << "cache_prob_grid = ";
  for (std::size_t i = 0; i < cfg.cache_prob_grid.size(); ++i) {
    out << (i ? "," : "") << fmt_double(cfg.cache_prob_grid[i]);
  }
  out << "\n\n[run]\n";
  out << "seed = " << cfg.seed << "\n";
  out << "output_dir = " << cfg.output_dir << "\n";
}

EpsilonSchedule parse_schedule(const std::string& text) {
  if (text == "1/t") return EpsilonSchedule::inverse_time();
  return EpsilonSchedule::constant(parse_double(text, "schedule"));
}

}  // namespace cacherec

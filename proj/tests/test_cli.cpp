#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "cacherec/config.hpp"
#include "cacherec/experiments.hpp"
#include "cacherec/synthetic.hpp"

using namespace cacherec;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n_users = 4;
  cfg.n_contents = 10;
  cfg.cache_size = 2;
  cfg.cache_size_grid = {2, 5};
  cfg.list_size = 2;
  cfg.n_slots = 15;
  cfg.requests_per_slot = 20;
  cfg.n_drops = 4000;
  cfg.cache_prob_grid = {0.3, 1.0};
  cfg.schedules = {"0.2", "1/t"};
  cfg.threshold_sweep_points = 3;
  cfg.seed = 5;
  return cfg;
}

}  // namespace

TEST_CASE("config round-trips through serialization") {
  ExperimentConfig cfg = small_config();
  cfg.alpha = 3.5;
  cfg.gamma0_db = -6.25;
  cfg.theta_max = 0.07;
  cfg.dataset_kind = "synthetic";
  cfg.output_dir = "/tmp/somewhere";

  std::ostringstream out;
  write_config(cfg, out);
  std::istringstream in(out.str());
  const ExperimentConfig back = parse_config(in);

  CHECK(back.alpha == cfg.alpha);
  CHECK(back.gamma0_db == cfg.gamma0_db);
  CHECK(back.n_users == cfg.n_users);
  CHECK(back.cache_size_grid == cfg.cache_size_grid);
  CHECK(back.schedules == cfg.schedules);
  CHECK(back.theta_max == cfg.theta_max);
  CHECK(back.cache_prob_grid == cfg.cache_prob_grid);
  CHECK(back.seed == cfg.seed);
  CHECK(back.output_dir == cfg.output_dir);

  // a second pass is byte-identical
  std::ostringstream out2;
  write_config(back, out2);
  CHECK(out.str() == out2.str());
}

TEST_CASE("config rejects unknown sections and keys") {
  std::istringstream unknown_key("[network]\nalpha = 3.76\nbogus = 1\n");
  CHECK_THROWS_AS(parse_config(unknown_key), std::runtime_error);
  std::istringstream unknown_section("[martians]\ncount = 3\n");
  CHECK_THROWS_AS(parse_config(unknown_section), std::runtime_error);
  std::istringstream orphan("alpha = 3.76\n");
  CHECK_THROWS_AS(parse_config(orphan), std::runtime_error);
}

TEST_CASE("config validation catches bad values") {
  ExperimentConfig cfg = small_config();
  SUBCASE("alpha must exceed 2") {
    cfg.alpha = 1.9;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }
  SUBCASE("list size cannot exceed the catalog") {
    cfg.list_size = 11;
    CHECK_THROWS_AS(cfg.validate(), std::runtime_error);
  }
  SUBCASE("dataset kind is constrained") {
    cfg.dataset_kind = "csv";
    CHECK_THROWS_AS(cfg.validate(), std::runtime_error);
  }
  SUBCASE("schedules must parse") {
    cfg.schedules = {"fast"};
    CHECK_THROWS_AS(cfg.validate(), std::runtime_error);
  }
}

TEST_CASE("schedule parsing") {
  CHECK(parse_schedule("1/t").kind == EpsilonSchedule::Kind::kInverseTime);
  const auto fixed = parse_schedule("0.25");
  CHECK(fixed.kind == EpsilonSchedule::Kind::kConstant);
  CHECK(fixed.epsilon == 0.25);
  CHECK(parse_schedule("0").epsilon == 0.0);
  CHECK_THROWS_AS(parse_schedule("2.0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_schedule("t/1"), std::runtime_error);
}

TEST_CASE("resolved theta_max default tracks the catalog size") {
  ExperimentConfig cfg = small_config();
  cfg.theta_max = -1.0;
  CHECK(cfg.resolved_theta_max() == doctest::Approx(4.0 / 10.0));
  cfg.theta_max = 0.2;
  CHECK(cfg.resolved_theta_max() == 0.2);
}

TEST_CASE("population JSON round-trip") {
  SyntheticSpec spec;
  spec.n_users = 3;
  spec.n_contents = 6;
  spec.seed = 9;
  const UserPopulation pop = make_zipf_population(spec);

  std::ostringstream out;
  write_population_json(pop, out);
  std::istringstream in(out.str());
  const UserPopulation back = read_population_json(in);

  CHECK(back.n_users == pop.n_users);
  CHECK(back.activity == pop.activity);
  CHECK(back.preference == pop.preference);
  REQUIRE(back.thresholds.has_value());
  CHECK(*back.thresholds == *pop.thresholds);
  CHECK_NOTHROW(back.validate());
}

TEST_CASE("cmd_validate_sir emits a well-formed deterministic CSV") {
  const ExperimentConfig cfg = small_config();
  std::ostringstream a, b;
  CHECK(cmd_validate_sir(cfg, a) == 0);
  CHECK(cmd_validate_sir(cfg, b) == 0);
  CHECK(a.str() == b.str());

  std::istringstream lines(a.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "c_f,analytic,empirical,std_err,within_tolerance");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    CHECK(line.size() > 4);
    CHECK(line.substr(line.size() - 4) == "true");
  }
  CHECK(rows == 2);
}

TEST_CASE("cmd_sweep_cache_size orders the greedy policy first") {
  const ExperimentConfig cfg = small_config();
  std::ostringstream csv;
  CHECK(cmd_sweep_cache_size(cfg, csv) == 0);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "cache_size,alg1,baseline1,baseline2,baseline3,baseline4");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    std::istringstream fields(line);
    std::string field;
    std::getline(fields, field, ',');
    double values[5];
    for (double& v : values) {
      std::getline(fields, field, ',');
      values[static_cast<int>(&v - values)] = std::stod(field);
    }
    for (int i = 1; i < 5; ++i) CHECK(values[0] >= values[i] - 1e-9);
    ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("cmd_sweep_threshold keeps baseline 4 flat") {
  const ExperimentConfig cfg = small_config();
  std::ostringstream csv;
  CHECK(cmd_sweep_threshold(cfg, csv) == 0);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  double first_b4 = -1.0;
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    const auto pos = line.rfind(',');
    const double b4 = std::stod(line.substr(pos + 1));
    if (rows == 0) first_b4 = b4;
    CHECK(b4 == doctest::Approx(first_b4).epsilon(1e-12));
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("cmd_learn keeps the oracle column constant per schedule") {
  const ExperimentConfig cfg = small_config();
  std::ostringstream csv;
  CHECK(cmd_learn(cfg, csv) == 0);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "schedule,slot,epsilon,mode,objective_true_theta,oracle_objective,"
        "fraction_users_converged");
  std::map<std::string, std::string> oracle_by_schedule;
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    std::istringstream fields(line);
    std::string schedule, slot, eps, mode, obj, oracle;
    std::getline(fields, schedule, ',');
    std::getline(fields, slot, ',');
    std::getline(fields, eps, ',');
    std::getline(fields, mode, ',');
    std::getline(fields, obj, ',');
    std::getline(fields, oracle, ',');
    auto [it, fresh] = oracle_by_schedule.emplace(schedule, oracle);
    if (!fresh) CHECK(it->second == oracle);
  }
  CHECK(rows == 15 * 2);
  CHECK(oracle_by_schedule.size() == 2);
}

TEST_CASE("cmd_ingest produces a loadable population") {
  std::ostringstream logstream;
  for (int u = 0; u < 5; ++u) {
    for (int f = 0; f < 8; ++f) {
      logstream << "user" << u << ",song" << f << "," << (1 + (u * 7 + f * 3) % 11)
                << "\n";
    }
  }
  const std::string log_path = "/tmp/cacherec_test_log.csv";
  {
    std::ofstream out(log_path);
    out << logstream.str();
  }
  std::ostringstream json;
  CHECK(cmd_ingest(log_path, 3, 4, json) == 0);
  std::istringstream in(json.str());
  const UserPopulation pop = read_population_json(in);
  CHECK(pop.n_users == 3);
  CHECK(pop.n_contents() == 4);
  CHECK_NOTHROW(pop.validate());
}

TEST_CASE("load_population honors the dataset kind") {
  ExperimentConfig cfg = small_config();
  cfg.dataset_kind = "synthetic";
  const UserPopulation pop = load_population(cfg, cfg.resolved_theta_max());
  CHECK(pop.n_users == 4);
  CHECK(pop.n_contents() == 10);
  REQUIRE(pop.thresholds.has_value());
  for (double t : *pop.thresholds) {
    CHECK(t >= 0.0);
    CHECK(t <= cfg.resolved_theta_max());
  }
  CHECK_NOTHROW(pop.validate());
}

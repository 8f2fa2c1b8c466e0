#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cacherec/types.hpp"

namespace cacherec {

struct Catalog {
  int n_contents = 0;
  // optional K-dimensional relevance vector per content
  std::optional<Matrix> features;

  void validate() const;
};

struct UserPopulation {
  int n_users = 0;
  Vec activity;                   // v_u, sums to 1
  Matrix preference;              // row-stochastic p_uf
  std::optional<Vec> thresholds;  // ground truth, consumed only by simulators
  std::optional<Matrix> features; // optional K-dimensional vector per user

  int n_contents() const {
    return preference.empty() ? 0 : static_cast<int>(preference.front().size());
  }
  void validate() const;
};

struct PlayRecord {
  std::string user;
  std::string content;
  long long count = 0;
};

struct RequestLog {
  std::vector<PlayRecord> records;
};

// One triplet per line, tab- or comma-separated:
//   user_id<sep>content_id<sep>play_count
// Blank lines and lines starting with '#' are skipped.
RequestLog read_request_log(std::istream& in);
RequestLog read_request_log_file(const std::string& path);

// Keeps the k_users users with the largest total play counts and, among
// those users' plays, the k_contents contents with the largest aggregate
// counts. Ties break by ascending original id (lexicographic).
RequestLog top_k_filter(const RequestLog& log, std::size_t k_users,
                        std::size_t k_contents);

struct EstimatedInstance {
  UserPopulation population;
  Catalog catalog;
  std::vector<std::string> user_ids;     // dense index -> original id
  std::vector<std::string> content_ids;  // dense index -> original id
};

// p_uf = count(u,f) / sum_f count(u,f); v_u = total(u) / grand total.
// Ids map to dense indices in first-seen order over the log records.
EstimatedInstance estimate_from_log(const RequestLog& log);

// p_uf = exp(x_f . y_u) / sum_f' exp(x_f' . y_u), evaluated with per-row
// max subtraction. Requires both feature matrices.
Matrix softmax_preference(const Catalog& catalog, const UserPopulation& population);

}  // namespace cacherec

#include "cacherec/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cacherec {

namespace {

constexpr double kSumTol = 1e-9;

void check_feature_matrix(const Matrix& m, const char* what, int expected_rows) {
  if (static_cast<int>(m.size()) != expected_rows) {
    throw std::invalid_argument(std::string(what) + ": wrong number of feature rows");
  }
  if (m.empty()) return;
  const std::size_t k = m.front().size();
  if (k < 1) throw std::invalid_argument(std::string(what) + ": feature dimension must be >= 1");
  for (const auto& row : m) {
    if (row.size() != k) {
      throw std::invalid_argument(std::string(what) + ": inconsistent feature dimensions");
    }
  }
}

}  // namespace

void Catalog::validate() const {
  if (n_contents < 1) throw std::invalid_argument("Catalog: n_contents must be >= 1");
  if (features) check_feature_matrix(*features, "Catalog", n_contents);
}

void UserPopulation::validate() const {
  if (n_users < 1) throw std::invalid_argument("UserPopulation: n_users must be >= 1");
  if (static_cast<int>(activity.size()) != n_users) {
    throw std::invalid_argument("UserPopulation: activity length mismatch");
  }
  double vsum = 0.0;
  for (double v : activity) {
    if (v < 0.0) throw std::invalid_argument("UserPopulation: negative activity");
    vsum += v;
  }
  if (std::fabs(vsum - 1.0) > kSumTol) {
    throw std::invalid_argument("UserPopulation: activity does not sum to 1");
  }
  if (static_cast<int>(preference.size()) != n_users) {
    throw std::invalid_argument("UserPopulation: preference row count mismatch");
  }
  const std::size_t nf = preference.empty() ? 0 : preference.front().size();
  for (const auto& row : preference) {
    if (row.size() != nf) {
      throw std::invalid_argument("UserPopulation: ragged preference matrix");
    }
    double psum = 0.0;
    for (double p : row) {
      if (p < 0.0) throw std::invalid_argument("UserPopulation: negative preference");
      psum += p;
    }
    if (std::fabs(psum - 1.0) > kSumTol) {
      throw std::invalid_argument("UserPopulation: preference row does not sum to 1");
    }
  }
  if (thresholds) {
    if (static_cast<int>(thresholds->size()) != n_users) {
      throw std::invalid_argument("UserPopulation: thresholds length mismatch");
    }
    for (double t : *thresholds) {
      if (t < 0.0 || t > 1.0) {
        throw std::invalid_argument("UserPopulation: threshold outside [0,1]");
      }
    }
  }
  if (features) check_feature_matrix(*features, "UserPopulation", n_users);
}

RequestLog read_request_log(std::istream& in) {
  RequestLog log;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    const char sep = line.find('\t') != std::string::npos ? '\t' : ',';
    std::istringstream ls(line);
    PlayRecord rec;
    std::string count_field;
    if (!std::getline(ls, rec.user, sep) || !std::getline(ls, rec.content, sep) ||
        !std::getline(ls, count_field)) {
      throw std::runtime_error("request log: malformed line " + std::to_string(lineno));
    }
    try {
      rec.count = std::stoll(count_field);
    } catch (const std::exception&) {
      throw std::runtime_error("request log: bad play count on line " + std::to_string(lineno));
    }
    if (rec.count < 0) {
      throw std::runtime_error("request log: negative play count on line " + std::to_string(lineno));
    }
    log.records.push_back(std::move(rec));
  }
  return log;
}

RequestLog read_request_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("request log: cannot open " + path);
  return read_request_log(in);
}

RequestLog top_k_filter(const RequestLog& log, std::size_t k_users,
                        std::size_t k_contents) {
  if (log.records.empty()) throw std::invalid_argument("top_k_filter: empty log");
  if (k_users < 1 || k_contents < 1) {
    throw std::invalid_argument("top_k_filter: k_users and k_contents must be >= 1");
  }

  auto select_top = [](const std::map<std::string, long long>& totals,
                       std::size_t k, const char* what) {
    std::vector<std::pair<std::string, long long>> ranked(totals.begin(), totals.end());
    if (ranked.size() < k && k != static_cast<std::size_t>(-1)) {
      throw std::runtime_error(std::string("top_k_filter: only ") +
                               std::to_string(ranked.size()) + " distinct " + what +
                               ", requested " + std::to_string(k));
    }
    // totals descending, id ascending on ties; map iteration is already
    // id-ascending so stable_sort keeps that order within equal totals
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::set<std::string> kept;
    for (std::size_t i = 0; i < ranked.size() && i < k; ++i) kept.insert(ranked[i].first);
    return kept;
  };

  std::map<std::string, long long> user_totals;
  for (const auto& r : log.records) user_totals[r.user] += r.count;
  const std::set<std::string> users = select_top(user_totals, k_users, "users");

  std::map<std::string, long long> content_totals;
  for (const auto& r : log.records) {
    if (users.count(r.user)) content_totals[r.content] += r.count;
  }
  const std::set<std::string> contents = select_top(content_totals, k_contents, "contents");

  RequestLog out;
  for (const auto& r : log.records) {
    if (users.count(r.user) && contents.count(r.content)) out.records.push_back(r);
  }
  return out;
}

EstimatedInstance estimate_from_log(const RequestLog& log) {
  if (log.records.empty()) throw std::invalid_argument("estimate_from_log: empty log");

  EstimatedInstance out;
  std::unordered_map<std::string, int> user_index;
  std::unordered_map<std::string, int> content_index;
  for (const auto& r : log.records) {
    if (user_index.emplace(r.user, static_cast<int>(out.user_ids.size())).second) {
      out.user_ids.push_back(r.user);
    }
    if (content_index.emplace(r.content, static_cast<int>(out.content_ids.size())).second) {
      out.content_ids.push_back(r.content);
    }
  }

  const int nu = static_cast<int>(out.user_ids.size());
  const int nf = static_cast<int>(out.content_ids.size());
  std::vector<std::vector<long long>> counts(nu, std::vector<long long>(nf, 0));
  for (const auto& r : log.records) {
    counts[user_index[r.user]][content_index[r.content]] += r.count;
  }

  std::vector<long long> user_totals(nu, 0);
  long long grand_total = 0;
  for (int u = 0; u < nu; ++u) {
    for (int f = 0; f < nf; ++f) user_totals[u] += counts[u][f];
    if (user_totals[u] <= 0) {
      throw std::runtime_error("estimate_from_log: user '" + out.user_ids[u] +
                               "' has zero total plays");
    }
    grand_total += user_totals[u];
  }

  out.population.n_users = nu;
  out.population.activity.resize(nu);
  out.population.preference.assign(nu, Vec(nf, 0.0));
  for (int u = 0; u < nu; ++u) {
    out.population.activity[u] =
        static_cast<double>(user_totals[u]) / static_cast<double>(grand_total);
    for (int f = 0; f < nf; ++f) {
      out.population.preference[u][f] =
          static_cast<double>(counts[u][f]) / static_cast<double>(user_totals[u]);
    }
  }
  out.catalog.n_contents = nf;
  return out;
}

Matrix softmax_preference(const Catalog& catalog, const UserPopulation& population) {
  if (!catalog.features || !population.features) {
    throw std::invalid_argument("softmax_preference: both feature matrices are required");
  }
  catalog.validate();
  const Matrix& xf = *catalog.features;
  const Matrix& yu = *population.features;
  const std::size_t k = xf.front().size();
  if (yu.empty() || yu.front().size() != k) {
    throw std::invalid_argument("softmax_preference: feature dimension mismatch");
  }

  Matrix pref(yu.size(), Vec(xf.size(), 0.0));
  for (std::size_t u = 0; u < yu.size(); ++u) {
    Vec scores(xf.size(), 0.0);
    double max_score = -std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < xf.size(); ++f) {
      double s = 0.0;
      for (std::size_t j = 0; j < k; ++j) s += xf[f][j] * yu[u][j];
      scores[f] = s;
      max_score = std::max(max_score, s);
    }
    double denom = 0.0;
    for (double s : scores) denom += std::exp(s - max_score);
    for (std::size_t f = 0; f < xf.size(); ++f) {
      pref[u][f] = std::exp(scores[f] - max_score) / denom;
    }
  }
  return pref;
}

}  // namespace cacherec

#include "cacherec/cacheopt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cacherec {

void CachingPolicy::validate() const {
  if (cache_size < 1) throw std::invalid_argument("CachingPolicy: cache_size must be >= 1");
  double sum = 0.0;
  for (double c : probabilities) {
    if (c < 0.0 || c > 1.0) {
      throw std::invalid_argument("CachingPolicy: probability outside [0,1]");
    }
    sum += c;
  }
  if (sum > cache_size + 1e-6) {
    throw std::invalid_argument("CachingPolicy: probabilities exceed cache budget");
  }
}

namespace {

inline double clamp01(double x) { return std::max(0.0, std::min(1.0, x)); }

Vec allocation_at(double mu, const Vec& popularity, const SirConstants& k) {
  Vec c(popularity.size(), 0.0);
  const double scale = 1.0 / (std::sqrt(mu) * k.g1);
  const double offset = k.g2 / k.g1;
  for (std::size_t f = 0; f < popularity.size(); ++f) {
    if (popularity[f] <= 0.0) continue;  // zero demand clamps to zero
    c[f] = clamp01(std::sqrt(k.g2 * popularity[f]) * scale - offset);
  }
  return c;
}

}  // namespace

double multiplier_residual(double mu, const Vec& popularity, const SirConstants& k,
                           int cache_size) {
  if (mu <= 0.0) throw std::invalid_argument("multiplier_residual: mu must be positive");
  const Vec c = allocation_at(mu, popularity, k);
  double sum = 0.0;
  for (double cf : c) sum += cf;
  return sum - cache_size;
}

CachingPolicy optimal_caching(const Vec& popularity, const SirConstants& k,
                              int cache_size, double tol, BisectionStats* stats) {
  const int nf = static_cast<int>(popularity.size());
  if (nf < 1) throw std::invalid_argument("optimal_caching: empty popularity");
  if (cache_size < 1) throw std::invalid_argument("optimal_caching: cache_size must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("optimal_caching: tol must be positive");
  double max_pop = 0.0, sum_pop = 0.0;
  for (double p : popularity) {
    if (p < 0.0) throw std::invalid_argument("optimal_caching: negative popularity");
    max_pop = std::max(max_pop, p);
    sum_pop += p;
  }
  if (max_pop == 0.0) throw std::invalid_argument("optimal_caching: all-zero popularity");
  if (std::fabs(sum_pop - 1.0) > 1e-6) {
    throw std::invalid_argument("optimal_caching: popularity does not sum to 1");
  }

  if (cache_size >= nf) {
    // budget vacuous
    if (stats) *stats = BisectionStats{0, 0.0, static_cast<double>(nf - cache_size)};
    return CachingPolicy{Vec(nf, 1.0), cache_size};
  }

  const double delta0 = max_pop / k.g2;
  double lo = tol * delta0 * 1e-6;
  double hi = delta0;
  double res_lo = multiplier_residual(lo, popularity, k, cache_size);
  double res_hi = multiplier_residual(hi, popularity, k, cache_size);
  // at mu = delta0 every clamp is at 0, so res_hi = -cache_size < 0
  if (res_lo < 0.0) {
    // every positive-popularity content is fully cached and the budget is slack
    Vec c = allocation_at(lo, popularity, k);
    if (stats) *stats = BisectionStats{0, lo, res_lo};
    return CachingPolicy{std::move(c), cache_size};
  }
  if (res_lo * res_hi > 0.0) {
    throw std::runtime_error("optimal_caching: bisection cannot bracket, residuals " +
                             std::to_string(res_lo) + " and " + std::to_string(res_hi));
  }

  const double width_tol = tol * delta0 * 1e-6;
  double mu = hi, res = res_hi;
  int iters = 0;
  while (std::fabs(res) > tol && hi - lo > width_tol) {
    mu = 0.5 * (lo + hi);
    res = multiplier_residual(mu, popularity, k, cache_size);
    ++iters;
    if (res > 0.0) {
      lo = mu;
    } else {
      hi = mu;
    }
  }
  if (stats) *stats = BisectionStats{iters, mu, res};
  return CachingPolicy{allocation_at(mu, popularity, k), cache_size};
}

}  // namespace cacherec

#include "cacherec/sgeom.hpp"

#include <cmath>
#include <stdexcept>

namespace cacherec {

void NetworkParams::validate() const {
  if (bs_density <= 0.0) throw std::invalid_argument("NetworkParams: bs_density must be positive");
  if (n_antennas < 1) throw std::invalid_argument("NetworkParams: n_antennas must be >= 1");
  if (pathloss_alpha <= 2.0) {
    throw std::invalid_argument("NetworkParams: pathloss_alpha must exceed 2");
  }
  if (sir_threshold <= 0.0) {
    throw std::invalid_argument("NetworkParams: sir_threshold must be positive");
  }
}

double ln_gamma(double x) {
  if (x <= 0.0) throw std::invalid_argument("ln_gamma: argument must be positive");
  return std::lgamma(x);
}

namespace {

// Power series sum_k (a)_k (b)_k / (c)_k z^k / k!, for |z| < 1.
// Stops once three consecutive terms are below 1e-16 of the partial sum.
double series_2f1(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  int small_streak = 0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (std::fabs(term) < 1e-16 * std::fabs(sum)) {
      if (++small_streak >= 3) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw std::runtime_error("gauss_2f1: series did not converge");
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z) {
  if (c <= 0.0 && c == std::floor(c)) {
    throw std::invalid_argument("gauss_2f1: c is a nonpositive integer");
  }
  if (z >= 1.0) throw std::invalid_argument("gauss_2f1: z >= 1 unsupported");
  if (z == 0.0) return 1.0;
  if (std::fabs(z) <= 0.5) return series_2f1(a, b, c, z);
  if (z < 0.0) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-b} 2F1(c-a, b; c; z/(z-1))
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -b) * series_2f1(c - a, b, c, w);
  }
  // 0.5 < z < 1: direct series still converges, just more slowly
  return series_2f1(a, b, c, z);
}

SirConstants sir_constants(const NetworkParams& params) {
  params.validate();
  const double alpha = params.pathloss_alpha;
  const double nt = static_cast<double>(params.n_antennas);
  const double gamma0 = params.sir_threshold;
  const double two_over_alpha = 2.0 / alpha;

  const double f = gauss_2f1(-two_over_alpha, nt, 1.0 - two_over_alpha, -gamma0);
  const double g2 = std::exp(ln_gamma(1.0 - two_over_alpha) + ln_gamma(nt + two_over_alpha) -
                             ln_gamma(nt)) *
                    std::pow(gamma0, two_over_alpha);
  return SirConstants{f - g2, g2};
}

double offload_success_prob(double cache_prob, const SirConstants& k) {
  if (cache_prob < 0.0 || cache_prob > 1.0) {
    throw std::invalid_argument("offload_success_prob: cache_prob outside [0,1]");
  }
  if (cache_prob == 0.0) return 0.0;
  return cache_prob / (k.g1 * cache_prob + k.g2);
}

double objective_from_popularity(const Vec& caching, const Vec& popularity,
                                 const SirConstants& k) {
  if (caching.size() != popularity.size()) {
    throw std::invalid_argument("objective: caching/popularity length mismatch");
  }
  double s = 0.0;
  for (std::size_t f = 0; f < caching.size(); ++f) {
    s += popularity[f] * offload_success_prob(caching[f], k);
  }
  return s;
}

double objective(const Vec& caching, const RecommendationPolicy& policy,
                 const Vec& thresholds, const UserPopulation& population,
                 const SirConstants& k) {
  return objective_from_popularity(
      caching, popularity_after_rec(policy, thresholds, population), k);
}

}  // namespace cacherec

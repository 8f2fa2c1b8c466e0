#include "cacherec/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cacherec {

void DropConfig::validate() const {
  params.validate();
  if (window_radius < 0.0) throw std::invalid_argument("DropConfig: negative window radius");
  if (n_drops < 1) throw std::invalid_argument("DropConfig: n_drops must be >= 1");
  if (cache_prob < 0.0 || cache_prob > 1.0) {
    throw std::invalid_argument("DropConfig: cache_prob outside [0,1]");
  }
  if (cache_prob > 0.0) {
    const double radius =
        window_radius > 0.0 ? window_radius
                            : default_window_radius(params.bs_density, cache_prob);
    const double no_server =
        std::exp(-cache_prob * params.bs_density * std::numbers::pi * radius * radius);
    if (no_server > 1e-6) {
      throw std::invalid_argument("DropConfig: window too small, no-server probability above 1e-6");
    }
  }
}

std::vector<Point> sample_ppp(double density, double radius, Rng& rng) {
  if (density <= 0.0 || radius <= 0.0) {
    throw std::invalid_argument("sample_ppp: density and radius must be positive");
  }
  const double mean = density * std::numbers::pi * radius * radius;
  const long n = rng.poisson(mean);
  std::vector<Point> points;
  points.reserve(n);
  for (long i = 0; i < n; ++i) {
    const double r = radius * std::sqrt(rng.uniform());
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    points.push_back(Point{r * std::cos(phi), r * std::sin(phi)});
  }
  return points;
}

double default_window_radius(double density, double cache_prob) {
  return 15.0 / std::sqrt(density * std::numbers::pi * std::max(cache_prob, 0.05));
}

DropOutcome simulate_offload(const DropConfig& cfg) {
  cfg.validate();
  if (cfg.cache_prob == 0.0) {
    // no serving BS can exist
    return DropOutcome{0, cfg.n_drops, 0.0, 0.0};
  }

  const double radius =
      cfg.window_radius > 0.0 ? cfg.window_radius
                              : default_window_radius(cfg.params.bs_density, cfg.cache_prob);
  const double mean =
      cfg.params.bs_density * std::numbers::pi * radius * radius;
  const int nt = cfg.params.n_antennas;
  const double alpha = cfg.params.pathloss_alpha;
  const double gamma0 = cfg.params.sir_threshold;

  long successes = 0;
  std::vector<double> r2;       // squared BS distances, user at the origin
  std::vector<char> caching;
  for (long drop = 0; drop < cfg.n_drops; ++drop) {
    Rng rng = Rng::derive(cfg.seed, static_cast<std::uint64_t>(drop));
    const long n = rng.poisson(mean);
    r2.clear();
    caching.clear();
    int server = -1;
    double server_r2 = radius * radius * 4.0;
    for (long b = 0; b < n; ++b) {
      // only distances matter; r = R sqrt(U) gives the uniform-disk radial law
      const double rr = radius * radius * rng.uniform();
      const bool caches = rng.uniform() < cfg.cache_prob;
      r2.push_back(rr);
      caching.push_back(caches ? 1 : 0);
      if (caches && rr < server_r2) {
        server_r2 = rr;
        server = static_cast<int>(r2.size()) - 1;
      }
    }
    if (server < 0) continue;  // no caching BS in window counts as failure

    double interference = 0.0;
    for (std::size_t b = 0; b < r2.size(); ++b) {
      if (static_cast<int>(b) == server) continue;
      double gain = 0.0;  // Gamma(N_t, 1/N_t) = mean of N_t unit exponentials
      for (int j = 0; j < nt; ++j) gain += rng.exponential();
      gain /= nt;
      interference += gain * std::pow(r2[b], -alpha / 2.0);
    }
    const double h = rng.exponential();
    const double signal = h * std::pow(server_r2, -alpha / 2.0);
    if (signal >= gamma0 * nt * interference) ++successes;
  }

  DropOutcome out;
  out.successes = successes;
  out.failures = cfg.n_drops - successes;
  out.probability = static_cast<double>(successes) / cfg.n_drops;
  out.std_error =
      std::sqrt(out.probability * (1.0 - out.probability) / cfg.n_drops);
  return out;
}

}  // namespace cacherec

#include "cacherec/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "cacherec/rng.hpp"

namespace cacherec {

namespace {

// Marsaglia-Tsang; shape < 1 handled by the boost U^{1/a} identity.
double gamma_variate(double shape, Rng& rng) {
  if (shape <= 0.0) throw std::invalid_argument("gamma_variate: shape must be positive");
  if (shape < 1.0) {
    const double u = std::max(rng.uniform(), 1e-300);
    return gamma_variate(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    // polar normal draw
    double n;
    {
      double u1 = rng.uniform(), u2 = rng.uniform();
      while (u1 <= 0.0) u1 = rng.uniform();
      n = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
    const double v = 1.0 + c * n;
    if (v <= 0.0) continue;
    const double v3 = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * n * n * n * n) return d * v3;
    if (u > 0.0 && std::log(u) < 0.5 * n * n + d * (1.0 - v3 + std::log(v3))) {
      return d * v3;
    }
  }
}

void normalize(Vec& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  for (double& x : v) x /= sum;
}

}  // namespace

UserPopulation make_zipf_population(const SyntheticSpec& spec) {
  if (spec.n_users < 1 || spec.n_contents < 1) {
    throw std::invalid_argument("make_zipf_population: sizes must be >= 1");
  }
  if (spec.theta_max < 0.0 || spec.theta_max > 1.0) {
    throw std::invalid_argument("make_zipf_population: theta_max outside [0,1]");
  }

  Vec base(spec.n_contents);
  for (int f = 0; f < spec.n_contents; ++f) {
    base[f] = std::pow(static_cast<double>(f + 1), -spec.zipf_exponent);
  }
  normalize(base);

  Rng pref_rng = Rng::derive(spec.seed, 0);
  Rng act_rng = Rng::derive(spec.seed, 1);
  Rng theta_rng = Rng::derive(spec.seed, 2);

  UserPopulation pop;
  pop.n_users = spec.n_users;
  pop.preference.reserve(spec.n_users);
  for (int u = 0; u < spec.n_users; ++u) {
    Vec row(spec.n_contents);
    for (int f = 0; f < spec.n_contents; ++f) {
      const double shape = spec.dirichlet_scale * base[f] * spec.n_contents;
      row[f] = gamma_variate(shape, pref_rng);
    }
    normalize(row);
    pop.preference.push_back(std::move(row));
  }

  pop.activity.resize(spec.n_users);
  for (double& v : pop.activity) v = gamma_variate(2.0, act_rng);
  normalize(pop.activity);

  Vec thetas(spec.n_users);
  for (double& t : thetas) t = spec.theta_max * theta_rng.uniform();
  pop.thresholds = std::move(thetas);

  pop.validate();
  return pop;
}

}  // namespace cacherec

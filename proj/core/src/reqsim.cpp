#include "cacherec/reqsim.hpp"

#include <stdexcept>

#include "cacherec/demand.hpp"

namespace cacherec {

int sample_user(const Vec& activity, Rng& rng) {
  return rng.categorical(activity);
}

RequestObservation generate_request(int user, const std::vector<int>& list,
                                    double threshold, const Vec& pref_row,
                                    int list_size, Rng& rng) {
  if (static_cast<int>(list.size()) != list_size) {
    throw std::invalid_argument("generate_request: list size != N_m");
  }
  const std::vector<int> cand = candidate_subset(list, threshold, pref_row);
  const double accept = static_cast<double>(cand.size()) / list_size;

  RequestObservation obs;
  obs.user = user;
  if (!cand.empty() && rng.uniform() < accept) {
    Vec cand_pref(cand.size(), 0.0);
    double mass = 0.0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      cand_pref[i] = pref_row[cand[i]];
      mass += cand_pref[i];
    }
    if (mass <= 0.0) {
      throw std::runtime_error("generate_request: candidate subset has zero mass");
    }
    for (double& p : cand_pref) p /= mass;
    obs.content = cand[rng.categorical(cand_pref)];
    obs.from_list = true;
  } else {
    obs.content = rng.categorical(pref_row);
    obs.from_list = false;
  }
  return obs;
}

}  // namespace cacherec

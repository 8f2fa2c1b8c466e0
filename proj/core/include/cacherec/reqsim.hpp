#pragma once

#include "cacherec/rng.hpp"
#include "cacherec/types.hpp"

namespace cacherec {

struct RequestObservation {
  int user = -1;
  int content = -1;
  // true only when the request came through the recommendation branch;
  // an organic request for a listed content keeps false
  bool from_list = false;
};

// Categorical draw over the activity vector.
int sample_user(const Vec& activity, Rng& rng);

// One request of a user facing a recommendation list: with probability
// q_u = |A_u|/list_size the content is drawn from the candidate subset
// renormalized by preference, otherwise from the inherent preference row.
RequestObservation generate_request(int user, const std::vector<int>& list,
                                    double threshold, const Vec& pref_row,
                                    int list_size, Rng& rng);

}  // namespace cacherec

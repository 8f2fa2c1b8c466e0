#pragma once

#include "cacherec/recopt.hpp"

namespace cacherec {

// "Rec UP - Cache Pop - Rec Adj": top-N_m preferred lists, cache the
// top-N_c popular contents after recommendation as a 0/1 vector, then
// swap non-cached listed contents for cached ones from the potential set.
JointPolicy baseline_rec_up_cache_pop_rec_adj(const UserPopulation& population,
                                              const Vec& thresholds,
                                              const SirConstants& k, int cache_size,
                                              int list_size);

// "Rec Pop - Cache Pop": one shared list grown greedily on the objective
// with top-N_c 0/1 caching recomputed per addition.
JointPolicy baseline_rec_pop_cache_pop(const UserPopulation& population,
                                       const Vec& thresholds, const SirConstants& k,
                                       int cache_size, int list_size);

// "Cache Opt - Rec UP": caching optimized on inherent popularity, lists are
// top-N_m preferred; the lists still shape demand in the evaluation.
JointPolicy baseline_cache_opt_rec_up(const UserPopulation& population,
                                      const Vec& thresholds, const SirConstants& k,
                                      int cache_size, int list_size);

// "Cache Opt - No Rec": caching optimized on inherent popularity, no lists.
JointPolicy baseline_cache_opt_no_rec(const UserPopulation& population,
                                      const SirConstants& k, int cache_size);

// Top-N_c contents by popularity as a 0/1 caching vector, ties by
// ascending content index.
Vec top_k_caching(const Vec& popularity, int cache_size);

}  // namespace cacherec

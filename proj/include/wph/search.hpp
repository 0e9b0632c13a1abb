#pragma once

#include <cstdint>
#include <vector>

#include "wph/core.hpp"
#include "wph/hypersurface.hpp"
#include "wph/rational.hpp"

namespace wph {

struct SearchOptions {
  std::int64_t member_dim = 3;
  Weight max_weight_sum = 0;
  std::int64_t amplitude = 1;
  std::int64_t plurigenera_up_to = 0;
  // Keep only records with P_1 = ... = P_vanishing = 0.
  std::int64_t vanishing = 0;
};

struct SearchRecord {
  Weights weights;
  std::int64_t degree;
  std::int64_t amplitude;
  Rational volume;
  std::vector<BigInt> plurigenera;  // P_1..P_M, M = max(plurigenera_up_to, vanishing)
  bool well_formed;
  bool quasi_smooth;
  bool canonical;  // every singularity of the general member is canonical
  // Informational: P(w) itself may carry non-canonical points that X misses.
  bool ambient_canonical;
};

/// Nondecreasing weight tuples of length member_dim+2 with sum <= max_weight_sum,
/// d = sum + amplitude, kept when well-formed, quasi-smooth and with canonical
/// singularities on the general member.
/// Sorted by (volume, weights). Work is split over leading weights; the result
/// does not depend on the number of workers.
std::vector<SearchRecord> enumerate_candidates(const SearchOptions& options, const Budgets& budgets = {});

/// Smallest-volume record within the searched bound. Throws EmptyResult.
SearchRecord find_min_volume(const SearchOptions& options, const Budgets& budgets = {});

}  // namespace wph

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wph/core.hpp"
#include "wph/hypersurface.hpp"
#include "wph/rational.hpp"

namespace wph {

/// N(0..M): the number of monomials of each weighted degree, i.e. the
/// coefficients of prod_i 1/(1 - t^{a_i}) up to t^M.
class MonomialCountTable {
 public:
  MonomialCountTable(const Weights& weights, std::int64_t max_degree, const Budgets& budgets = {});

  std::int64_t max_degree() const { return static_cast<std::int64_t>(counts_.size()) - 1; }

  /// N(m); zero for negative m. Throws std::out_of_range above max_degree().
  const BigInt& operator()(std::int64_t m) const;

 private:
  std::vector<BigInt> counts_;
};

BigInt monomial_count(const Weights& w, std::int64_t m, const Budgets& budgets = {});

/// Recursive exponent enumeration. Limited to m <= 200 and at most 8 weights.
BigInt monomial_count_enum(const Weights& w, std::int64_t m);

/// Same counting for a single variable list, which Weights cannot hold.
BigInt monomial_count_enum(std::span<const Weight> w, std::int64_t m);

/// Indices i such that some monomial of degree t has positive exponent at z_i.
std::vector<std::size_t> variables_present(const Weights& w, std::int64_t t, const Budgets& budgets = {});

/// P_m = N(m*alpha) - N(m*alpha - d) for a quasi-smooth, well-formed X with
/// K_X ~ O(alpha). Quasi-smoothness is not checked here. Throws InvalidInput
/// when alpha <= 0 or m < 1.
BigInt plurigenus(const WeightedHypersurface& x, std::int64_t m, const Budgets& budgets = {});

/// P_1..P_M from one shared table.
std::vector<BigInt> plurigenera_table(const WeightedHypersurface& x, std::int64_t up_to, const Budgets& budgets = {});

/// Largest m with P_1 = ... = P_m = 0. Scans while m*alpha <= 10*d and throws
/// EmptyResult if every plurigenus in that range vanishes.
std::int64_t vanishing_threshold(const WeightedHypersurface& x, const Budgets& budgets = {});

}  // namespace wph

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wph/quotient.hpp"

namespace wph {

/// Size limits for the exponential or table-driven computations.
struct Budgets {
  // Entries in one monomial-count table (degrees 0..M).
  std::int64_t table_cap = 10'000'000;
  // Maximum number of coordinates (or distinct weights) for subset enumeration.
  std::size_t subset_cap = 30;
  // Largest group order accepted by the Reid-Tai loop.
  Weight reid_tai_order_cap = 1'000'000;
  // Largest weight sum accepted by the candidate search.
  Weight search_sum_cap = 400;
  // Search worker count; 0 picks the hardware concurrency.
  unsigned search_jobs = 0;
};

/// Defaults overridden by WPH_TABLE_CAP, WPH_SUBSET_CAP, WPH_RT_ORDER_CAP,
/// WPH_SEARCH_SUM_CAP and WPH_SEARCH_JOBS when set.
Budgets budgets_from_env();

/// Ordered weight tuple (a_0,...,a_n) of a weighted projective space.
/// At least two entries, all positive. Order is preserved: indices name coordinates.
class Weights {
 public:
  explicit Weights(std::vector<Weight> entries);

  std::size_t size() const { return entries_.size(); }
  Weight operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Weight> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Weight sum() const;
  Weight min() const;
  Weight max() const;

  /// Distinct values with their multiplicities, ascending by value.
  std::vector<std::pair<Weight, std::size_t>> distinct() const;

  friend bool operator==(const Weights&, const Weights&) = default;
  friend auto operator<=>(const Weights&, const Weights&) = default;

 private:
  std::vector<Weight> entries_;
};

inline constexpr Weight kMaxWeight = 1'000'000'000;

/// Parses "4,5,6,7,23"; "1^4" expands to four ones.
Weights parse_weights(std::string_view text);

/// "4,5,6,7,23". With `compact`, runs of three or more equal entries print as "v^k".
std::string to_string(const Weights& w, bool compact = false);

Weight gcd_list(std::span<const Weight> values);

/// x mod r in [0, r-1] for x >= 0 (negative x is reduced as well).
Weight smallest_residue(Weight x, Weight r);

/// gcd of every n of the n+1 weights is 1.
bool well_formed(const Weights& w);

/// A coordinate subset S whose weights share the factor h = gcd{a_i : i in S} > 1.
struct StratumRecord {
  std::vector<std::size_t> indices;
  Weight h;

  friend bool operator==(const StratumRecord&, const StratumRecord&) = default;
};

/// Every nonempty subset with gcd > 1, ordered by size then lexicographically.
/// Throws BudgetExceeded when the tuple is longer than `budgets.subset_cap`.
std::vector<StratumRecord> singular_strata(const Weights& w, const Budgets& budgets = {});

/// Subsets S = {i : h | a_i} whose gcd is exactly h > 1: the closures of the
/// singular strata, one per distinct isotropy locus. Same ordering as
/// singular_strata; polynomial in the tuple length.
std::vector<StratumRecord> closed_strata(const Weights& w);

/// The type 1/h_S(a_0,...,^a_k,...,a_n) of a general point of stratum S.
/// Throws InvalidInput if k is not in S, NoSingularity if h_S = 1.
CyclicQuotientSingularity stratum_quotient_type(const Weights& w, std::span<const std::size_t> stratum,
                                                std::size_t k);

/// The type at each coordinate point with a_k > 1.
std::vector<std::pair<std::size_t, CyclicQuotientSingularity>> coordinate_point_types(const Weights& w);

}  // namespace wph

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wph/core.hpp"
#include "wph/hypersurface.hpp"
#include "wph/rational.hpp"

namespace wph {

struct Check {
  std::string name;
  bool passed;
  std::string value;  // exact quantities behind the verdict
};

struct FamilyReport {
  std::string family;  // "prop", "thm3", "thm4", "ample", "volume"
  std::vector<std::pair<std::string, std::string>> parameters;
  WeightedHypersurface hypersurface;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

/// X_d in P(k^(k+2), (k+1)^(2k-1), (k(k+1))^(l)) with d = (l+3)k(k+1): canonical,
/// K ~ O(1), dimension 3k+l-1, volume (l+3)/(k^(k+1+l) (k+1)^(2k-2+l)).
/// Requires k >= 2 and l >= 0.
FamilyReport canonical_family(std::int64_t k, std::int64_t l, const Budgets& budgets = {});

/// Dimension n >= 5 member of the canonical family (k = floor((n+1)/3)) with
/// P_m = 0 for 0 < m < k and volume below 3^(n+1)/(n-1)^n.
FamilyReport vanishing_plurigenera_witness(std::int64_t n, const Budgets& budgets = {});

/// Dimension n >= 7 member of the canonical family (k = floor((n-1)/3), l in
/// [2,4]) whose last l variables cannot occur in any degree below k(k+1), with
/// k(k+1) >= n(n-3)/9.
FamilyReport finite_map_obstruction_witness(std::int64_t n, const Budgets& budgets = {});

/// Smooth X with K ample whose top-weight variable is absent below degree
/// n+3 (n even, X_{2d} in P(1^(n),2,d), d = n+3) or n+2 (n odd, X_{2d} in
/// P(1^(n+1),d), d = n+2).
FamilyReport ample_witness(std::int64_t n, const Budgets& budgets = {});

struct VolumeParameters {
  std::int64_t r, s, a, b, t;
  std::int64_t unit_weights;  // m; the weights are (1^(m), a, s, b)
  std::int64_t degree;        // d = rab
};

/// Chooses b as the smallest positive solution of br = 1 mod s with br > 1,
/// then the smallest a coprime to s and b with at least max(s,1) unit weights.
/// Overrides are validated instead of searched.
VolumeParameters volume_parameters(std::int64_t r, std::int64_t s, std::optional<std::int64_t> a = {},
                                   std::optional<std::int64_t> b = {});

/// X_{rab} in P(1^(m), a, s, b) with volume exactly r/s and one terminal point.
FamilyReport volume_witness(std::int64_t r, std::int64_t s, std::optional<std::int64_t> a = {},
                            std::optional<std::int64_t> b = {}, const Budgets& budgets = {});

struct IntRange {
  std::int64_t first;
  std::int64_t last;
};

struct VerifyRanges {
  IntRange k{2, 6};
  IntRange l{0, 4};
  IntRange vanishing_n{5, 30};
  IntRange obstruction_n{7, 30};
  IntRange ample_n{1, 20};
  std::vector<std::pair<std::int64_t, std::int64_t>> volumes{{1, 2}, {2, 3}, {5, 7}, {3, 1}, {22, 7}, {355, 113}};
};

struct AggregateReport {
  std::vector<FamilyReport> reports;
  bool passed() const;
};

/// Every family over the given ranges; reports come back in parameter order
/// regardless of how the instances were scheduled.
AggregateReport verify_all(const VerifyRanges& ranges = {}, const Budgets& budgets = {});

}  // namespace wph

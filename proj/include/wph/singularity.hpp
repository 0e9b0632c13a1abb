#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wph/core.hpp"
#include "wph/quotient.hpp"
#include "wph/rational.hpp"

namespace wph {

/// Ordered from worst to best; "canonical" means >= CanonicalNotTerminal.
enum class SingularityClass { NotCanonical = 0, CanonicalNotTerminal = 1, Terminal = 2, Smooth = 3 };

std::string_view to_string(SingularityClass c);

constexpr bool is_canonical(SingularityClass c) { return c >= SingularityClass::CanonicalNotTerminal; }
constexpr bool is_terminal(SingularityClass c) { return c >= SingularityClass::Terminal; }

/// (1/r) * sum_i (j*b_i mod r), for 1 <= j <= r-1.
Rational reid_tai_sum(const CyclicQuotientSingularity& s, Weight j);

struct ReidTaiMinimum {
  Rational value;
  Weight j;  // smallest j attaining the minimum
};

/// Minimum of reid_tai_sum over every j in [1, r-1]. Requires r >= 2.
ReidTaiMinimum reid_tai_min(const CyclicQuotientSingularity& s, const Budgets& budgets = {});

/// r = 1 is Smooth; otherwise compares the Reid-Tai minimum against 1.
SingularityClass classify_quotient(const CyclicQuotientSingularity& s, const Budgets& budgets = {});

/// Stops at the first j whose sum drops below 1.
bool is_canonical_quotient(const CyclicQuotientSingularity& s, const Budgets& budgets = {});

/// The j in [1, r-1] for which exactly one weight acts nontrivially (the group
/// element is a quasi-reflection). Verdicts ignore this; reports surface it.
std::vector<Weight> quasi_reflections(const CyclicQuotientSingularity& s, const Budgets& budgets = {});

/// All singularities of P(w) are canonical, decided from the coordinate points
/// alone. Throws NotWellFormed for tuples that are not well-formed.
bool ambient_canonical(const Weights& w, const Budgets& budgets = {});

/// Same verdict from every singular stratum (full subset enumeration).
bool ambient_canonical_bruteforce(const Weights& w, const Budgets& budgets = {});

}  // namespace wph

#include "wph/singularity.hpp"

#include <map>
#include <string>

#include "wph/errors.hpp"

namespace wph {

namespace {

// Nonzero residues with multiplicities; the sums only depend on this.
std::vector<std::pair<Weight, Weight>> residue_histogram(const CyclicQuotientSingularity& s) {
  std::map<Weight, Weight> counts;
  for (Weight b : s.weights()) {
    const Weight rho = b % s.order();
    if (rho != 0) ++counts[rho];
  }
  return {counts.begin(), counts.end()};
}

// r times the Reid-Tai sum at j.
Weight scaled_sum(const std::vector<std::pair<Weight, Weight>>& histogram, Weight r, Weight j) {
  Weight total = 0;
  for (const auto& [rho, count] : histogram) total += count * ((j * rho) % r);
  return total;
}

void check_order(const CyclicQuotientSingularity& s, const Budgets& budgets) {
  if (s.order() < 2) throw InvalidInput("Reid-Tai sums need order r >= 2");
  if (s.order() > budgets.reid_tai_order_cap) {
    throw BudgetExceeded("quotient order " + std::to_string(s.order()) + " exceeds cap " +
                         std::to_string(budgets.reid_tai_order_cap));
  }
}

}  // namespace

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Smooth:
      return "Smooth";
    case SingularityClass::Terminal:
      return "Terminal";
    case SingularityClass::CanonicalNotTerminal:
      return "CanonicalNotTerminal";
    case SingularityClass::NotCanonical:
      return "NotCanonical";
  }
  return "?";
}

Rational reid_tai_sum(const CyclicQuotientSingularity& s, Weight j) {
  const Weight r = s.order();
  if (j < 1 || j > r - 1) {
    throw InvalidInput("j = " + std::to_string(j) + " outside [1, " + std::to_string(r - 1) + "]");
  }
  return Rational(BigInt(scaled_sum(residue_histogram(s), r, j)), BigInt(r));
}

ReidTaiMinimum reid_tai_min(const CyclicQuotientSingularity& s, const Budgets& budgets) {
  check_order(s, budgets);
  const Weight r = s.order();
  const auto histogram = residue_histogram(s);
  Weight best = scaled_sum(histogram, r, 1);
  Weight best_j = 1;
  for (Weight j = 2; j < r; ++j) {
    const Weight value = scaled_sum(histogram, r, j);
    if (value < best) {
      best = value;
      best_j = j;
    }
  }
  return {Rational(BigInt(best), BigInt(r)), best_j};
}

SingularityClass classify_quotient(const CyclicQuotientSingularity& s, const Budgets& budgets) {
  if (s.order() == 1) return SingularityClass::Smooth;
  const Rational min = reid_tai_min(s, budgets).value;
  if (min > Rational(1)) return SingularityClass::Terminal;
  if (min == Rational(1)) return SingularityClass::CanonicalNotTerminal;
  return SingularityClass::NotCanonical;
}

bool is_canonical_quotient(const CyclicQuotientSingularity& s, const Budgets& budgets) {
  if (s.order() == 1) return true;
  check_order(s, budgets);
  const Weight r = s.order();
  const auto histogram = residue_histogram(s);
  for (Weight j = 1; j < r; ++j) {
    if (scaled_sum(histogram, r, j) < r) return false;
  }
  return true;
}

std::vector<Weight> quasi_reflections(const CyclicQuotientSingularity& s, const Budgets& budgets) {
  std::vector<Weight> out;
  if (s.order() == 1) return out;
  check_order(s, budgets);
  const Weight r = s.order();
  const auto histogram = residue_histogram(s);
  for (Weight j = 1; j < r; ++j) {
    Weight moving = 0;
    for (const auto& [rho, count] : histogram) {
      if ((j * rho) % r != 0) moving += count;
    }
    if (moving == 1) out.push_back(j);
  }
  return out;
}

bool ambient_canonical(const Weights& w, const Budgets& budgets) {
  if (!well_formed(w)) throw NotWellFormed("ambient_canonical requires a well-formed weight tuple");
  // Coordinate points of equal weight have the same type up to permutation,
  // so one representative per distinct weight suffices.
  for (const auto& [a, count] : w.distinct()) {
    if (a == 1) continue;
    std::size_t k = 0;
    while (w[k] != a) ++k;
    const std::size_t single[] = {k};
    if (!is_canonical_quotient(stratum_quotient_type(w, single, k), budgets)) return false;
  }
  return true;
}

bool ambient_canonical_bruteforce(const Weights& w, const Budgets& budgets) {
  if (!well_formed(w)) throw NotWellFormed("ambient_canonical_bruteforce requires a well-formed weight tuple");
  for (const StratumRecord& stratum : singular_strata(w, budgets)) {
    const auto type = stratum_quotient_type(w, stratum.indices, stratum.indices.front());
    if (!is_canonical(classify_quotient(type, budgets))) return false;
  }
  return true;
}

}  // namespace wph

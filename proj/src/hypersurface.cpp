#include "wph/hypersurface.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "wph/errors.hpp"

namespace wph {

WeightedHypersurface::WeightedHypersurface(Weights weights, std::int64_t degree)
    : weights_(std::move(weights)), degree_(degree) {
  if (degree_ < 1) throw InvalidInput("hypersurface degree must be positive");
  if (weights_.size() < 3) throw InvalidInput("a hypersurface needs an ambient space of dimension >= 2");
}

WeightedHypersurface WeightedHypersurface::with_tangent_witness(std::size_t point, std::size_t variable) const {
  if (point >= weights_.size() || variable >= weights_.size() || point == variable) {
    throw InvalidInput("invalid tangent witness");
  }
  WeightedHypersurface copy = *this;
  copy.witnesses_[point] = variable;
  return copy;
}

std::optional<std::size_t> WeightedHypersurface::tangent_witness(std::size_t point) const {
  if (auto it = witnesses_.find(point); it != witnesses_.end()) return it->second;
  return std::nullopt;
}

Rational volume(const WeightedHypersurface& x) {
  const std::int64_t alpha = x.amplitude();
  if (alpha <= 0) {
    throw InvalidInput("volume is only defined here for amplitude >= 1 (got " + std::to_string(alpha) + ")");
  }
  BigInt numerator = x.degree();
  for (std::int64_t i = 0; i < x.dimension(); ++i) numerator *= alpha;
  BigInt denominator = 1;
  for (Weight a : x.weights()) denominator *= a;
  return Rational(numerator, denominator);
}

bool contains_coordinate_point(const WeightedHypersurface& x, std::size_t i) {
  if (i >= x.weights().size()) throw InvalidInput("coordinate index out of range");
  return x.degree() % x.weights()[i] != 0;
}

namespace {

using Reach = std::vector<char>;

void check_degree(std::int64_t degree, const Budgets& budgets) {
  if (degree + 1 > budgets.table_cap) {
    throw BudgetExceeded("degree " + std::to_string(degree) + " exceeds table cap " +
                         std::to_string(budgets.table_cap));
  }
}

void extend(Reach& reach, Weight a) {
  const auto top = static_cast<Weight>(reach.size());
  for (Weight m = a; m < top; ++m) {
    if (reach[static_cast<std::size_t>(m - a)]) reach[static_cast<std::size_t>(m)] = 1;
  }
}

Reach reach_of(const Weights& w, std::span<const std::size_t> indices, std::int64_t degree) {
  Reach reach(static_cast<std::size_t>(degree) + 1, 0);
  reach[0] = 1;
  for (std::size_t i : indices) extend(reach, w[i]);
  return reach;
}

bool reachable(const Reach& reach, std::int64_t m) {
  return m >= 0 && m < static_cast<std::int64_t>(reach.size()) && reach[static_cast<std::size_t>(m)];
}

// Monomials of exactly `degree` in the given variables, saturated at 2.
int monomials_up_to_two(const Weights& w, std::span<const std::size_t> indices, std::int64_t degree) {
  std::vector<unsigned char> count(static_cast<std::size_t>(degree) + 1, 0);
  count[0] = 1;
  for (std::size_t i : indices) {
    const Weight a = w[i];
    for (Weight m = a; m <= degree; ++m) {
      const int sum = count[static_cast<std::size_t>(m)] + count[static_cast<std::size_t>(m - a)];
      count[static_cast<std::size_t>(m)] = static_cast<unsigned char>(std::min(sum, 2));
    }
  }
  return count[static_cast<std::size_t>(degree)];
}

bool exists_solution(const Weights& w, std::span<const std::size_t> indices, std::size_t pos, std::int64_t remaining) {
  if (remaining == 0) return true;
  if (pos == indices.size()) return false;
  const Weight a = w[indices[pos]];
  for (std::int64_t left = remaining; left >= 0; left -= a) {
    if (exists_solution(w, indices, pos + 1, left)) return true;
  }
  return false;
}

}  // namespace

bool has_monomial_of_degree(const Weights& w, std::span<const std::size_t> indices, std::int64_t degree) {
  if (degree < 0) return false;
  for (std::size_t i : indices) {
    if (i >= w.size()) throw InvalidInput("coordinate index out of range");
  }
  return reach_of(w, indices, degree)[static_cast<std::size_t>(degree)] != 0;
}

bool quasi_smooth(const WeightedHypersurface& x, const Budgets& budgets) {
  const Weights& w = x.weights();
  const std::int64_t d = x.degree();
  for (Weight a : w) {
    if (a == d) return true;
  }
  const auto classes = w.distinct();
  if (classes.size() > budgets.subset_cap) {
    throw BudgetExceeded(std::to_string(classes.size()) + " distinct weights exceed subset cap " +
                         std::to_string(budgets.subset_cap));
  }
  check_degree(d, budgets);

  // Depth-first over subsets of weight classes; each level extends the
  // reachable-degree table of its parent by one weight.
  std::function<bool(std::size_t, const Reach&, std::size_t)> visit =
      [&](std::size_t next, const Reach& parent, std::size_t members) -> bool {
    for (std::size_t c = next; c < classes.size(); ++c) {
      Reach reach = parent;
      extend(reach, classes[c].first);
      const std::size_t subset_size = members + classes[c].second;
      if (!reach[static_cast<std::size_t>(d)]) {
        std::size_t partners = 0;
        for (const auto& [value, count] : classes) {
          if (reachable(reach, d - value)) partners += count;
        }
        if (partners < subset_size) return false;
      }
      if (!visit(c + 1, reach, subset_size)) return false;
    }
    return true;
  };

  Reach empty(static_cast<std::size_t>(d) + 1, 0);
  empty[0] = 1;
  return visit(0, empty, 0);
}

bool quasi_smooth_bruteforce(const WeightedHypersurface& x, const Budgets& budgets) {
  const Weights& w = x.weights();
  const std::int64_t d = x.degree();
  const std::size_t n = w.size();
  if (n > budgets.subset_cap || n >= 63) {
    throw BudgetExceeded("subset enumeration over " + std::to_string(n) + " coordinates exceeds cap");
  }
  for (Weight a : w) {
    if (a == d) return true;
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(i);
    }
    if (exists_solution(w, subset, 0, d)) continue;
    std::size_t partners = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (d - w[e] >= 0 && exists_solution(w, subset, 0, d - w[e])) ++partners;
    }
    if (partners < subset.size()) return false;
  }
  return true;
}

std::string_view to_string(Incidence incidence) {
  switch (incidence) {
    case Incidence::Missed:
      return "missed";
    case Incidence::Meets:
      return "meets";
    case Incidence::Contains:
      return "contains";
  }
  return "?";
}

SingularityReport singularity_report(const WeightedHypersurface& x, const Budgets& budgets) {
  const Weights& w = x.weights();
  const std::int64_t d = x.degree();
  check_degree(d, budgets);

  SingularityReport report;
  report.well_formed = well_formed(w);
  report.quasi_smooth = quasi_smooth(x, budgets);
  if (report.well_formed) report.ambient_canonical = ambient_canonical(w, budgets);

  SingularityClass worst = SingularityClass::Smooth;
  for (StratumRecord& stratum : closed_strata(w)) {
    const std::size_t k = stratum.indices.front();
    auto ambient_type = stratum_quotient_type(w, stratum.indices, k);
    const auto min = reid_tai_min(ambient_type, budgets);
    const auto ambient_class = classify_quotient(ambient_type, budgets);

    const int monomials = monomials_up_to_two(w, stratum.indices, d);
    const Incidence incidence =
        monomials == 0 ? Incidence::Contains : (monomials == 1 ? Incidence::Missed : Incidence::Meets);

    StratumEntry entry{std::move(stratum), ambient_type, min, ambient_class, incidence, {}, {}, {}, {}};
    entry.quasi_reflections = quasi_reflections(entry.ambient_type, budgets);

    if (report.quasi_smooth && incidence != Incidence::Missed) {
      const auto& indices = entry.stratum.indices;
      std::optional<std::size_t> eliminated;
      if (incidence == Incidence::Meets) {
        // X is transverse to the stratum: one more stratum direction is normal.
        eliminated = indices[1];
      } else {
        const Reach reach = reach_of(w, indices, d);
        auto in_stratum = [&](std::size_t e) {
          return std::find(indices.begin(), indices.end(), e) != indices.end();
        };
        if (indices.size() == 1) eliminated = x.tangent_witness(k);
        if (eliminated) {
          if (in_stratum(*eliminated) || !reachable(reach, d - w[*eliminated])) {
            throw InvalidInput("tangent witness z_" + std::to_string(*eliminated) +
                               " has no monomial of degree " + std::to_string(d) + " at this stratum");
          }
        } else {
          // Any candidate has a_e = d mod h, so the residues do not depend on the choice.
          for (std::size_t e = 0; e < w.size(); ++e) {
            if (!in_stratum(e) && reachable(reach, d - w[e])) {
              eliminated = e;
              break;
            }
          }
        }
      }
      if (eliminated) {
        std::vector<Weight> rest;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (i != k && i != *eliminated) rest.push_back(w[i]);
        }
        CyclicQuotientSingularity member(entry.stratum.h, std::move(rest));
        entry.member_class = classify_quotient(member, budgets);
        entry.member_type = std::move(member);
        entry.eliminated_variable = eliminated;
        worst = std::min(worst, *entry.member_class);
      }
    }
    report.entries.push_back(std::move(entry));
  }
  if (report.quasi_smooth) report.member_class = worst;
  return report;
}

}  // namespace wph

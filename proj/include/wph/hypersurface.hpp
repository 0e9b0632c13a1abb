#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wph/core.hpp"
#include "wph/rational.hpp"
#include "wph/singularity.hpp"

namespace wph {

/// The general hypersurface X_d of degree d in P(a_0,...,a_n).
///
/// A family constructor may attach tangent witnesses: for a coordinate point k
/// lying on X_d, the index e of a variable with a monomial z_k^M z_e of degree
/// d. Near that point dF/dz_e does not vanish, so z_e is eliminated from the
/// local coordinates of X_d.
class WeightedHypersurface {
 public:
  WeightedHypersurface(Weights weights, std::int64_t degree);

  const Weights& weights() const { return weights_; }
  std::int64_t degree() const { return degree_; }

  /// d - sum(a_i); adjunction gives K_X ~ O_X(amplitude).
  std::int64_t amplitude() const { return degree_ - weights_.sum(); }
  std::int64_t dimension() const { return static_cast<std::int64_t>(weights_.size()) - 2; }

  WeightedHypersurface with_tangent_witness(std::size_t point, std::size_t variable) const;
  std::optional<std::size_t> tangent_witness(std::size_t point) const;

 private:
  Weights weights_;
  std::int64_t degree_;
  std::map<std::size_t, std::size_t> witnesses_;
};

/// amplitude^dim * d / prod(a_i). Throws InvalidInput when amplitude <= 0.
Rational volume(const WeightedHypersurface& x);

/// The general X_d passes through coordinate point i iff a_i does not divide d.
bool contains_coordinate_point(const WeightedHypersurface& x, std::size_t i);

/// Whether some monomial in the variables `indices` has weighted degree
/// `degree`. Degree 0 is always representable (the empty monomial).
bool has_monomial_of_degree(const Weights& w, std::span<const std::size_t> indices, std::int64_t degree);

/// Quasi-smoothness of the general member: either d equals some weight (a
/// linear cone) or, for every nonempty coordinate subset I, (a) some monomial in
/// the I-variables has degree d, or (b) there are |I| distinct indices e with a
/// monomial (I-variables)*z_e of degree d.
///
/// Both conditions depend on I only through its set of distinct weights, and
/// the largest I with a given weight set is the hardest case, so the subsets
/// enumerated are subsets of distinct weights. Throws BudgetExceeded beyond
/// `budgets.subset_cap` distinct weights.
bool quasi_smooth(const WeightedHypersurface& x, const Budgets& budgets = {});

/// The same criterion evaluated literally over every coordinate subset with
/// recursive exponent search. Intended for small cases.
bool quasi_smooth_bruteforce(const WeightedHypersurface& x, const Budgets& budgets = {});

/// How the general member meets the open part of a closed stratum, i.e. the
/// points whose nonzero coordinates are exactly the stratum's.
enum class Incidence {
  Missed,    // the restriction of F is a single monomial, or a pure power at a point
  Meets,     // at least two monomials: a hypersurface of the stratum
  Contains,  // no monomial in the stratum variables: the stratum lies on X_d
};

std::string_view to_string(Incidence incidence);

struct StratumEntry {
  StratumRecord stratum;
  CyclicQuotientSingularity ambient_type;
  ReidTaiMinimum ambient_min;
  SingularityClass ambient_class;
  Incidence incidence;
  // Set only when X is quasi-smooth and meets the stratum.
  std::optional<CyclicQuotientSingularity> member_type;
  std::optional<SingularityClass> member_class;
  std::optional<std::size_t> eliminated_variable;
  std::vector<Weight> quasi_reflections;
};

struct SingularityReport {
  bool well_formed = false;
  bool quasi_smooth = false;
  std::optional<bool> ambient_canonical;  // unset unless well-formed
  std::vector<StratumEntry> entries;      // one per closed singular stratum
  // Worst member class over met strata; Smooth if none is met. Unset when X is
  // not quasi-smooth, as the local types are then not those of the ambient.
  std::optional<SingularityClass> member_class;
};

SingularityReport singularity_report(const WeightedHypersurface& x, const Budgets& budgets = {});

}  // namespace wph

#include "wph/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "wph/errors.hpp"
#include "wph/hilbert.hpp"
#include "wph/singularity.hpp"
#include "parallel.hpp"

namespace wph {

namespace {

BigInt power(std::int64_t base, std::int64_t exponent) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string str(std::int64_t v) { return std::to_string(v); }

std::vector<Weight> repeated(Weight value, std::int64_t count) {
  return std::vector<Weight>(static_cast<std::size_t>(count), value);
}

void append(std::vector<Weight>& out, const std::vector<Weight>& more) { out.insert(out.end(), more.begin(), more.end()); }

class ReportBuilder {
 public:
  ReportBuilder(std::string family, WeightedHypersurface x) : report_{std::move(family), {}, std::move(x), {}, {}} {}

  void param(std::string name, std::string value) { report_.parameters.emplace_back(std::move(name), std::move(value)); }
  void check(std::string name, bool passed, std::string value) {
    report_.checks.push_back({std::move(name), passed, std::move(value)});
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  const WeightedHypersurface& x() const { return report_.hypersurface; }
  FamilyReport take() { return std::move(report_); }

  void absorb(const FamilyReport& base) {
    for (const auto& c : base.checks) report_.checks.push_back(c);
  }

 private:
  FamilyReport report_;
};

// Present variables in every degree 1..limit-1, checked one degree at a time.
bool absent_below(const Weights& w, std::span<const std::size_t> indices, std::int64_t limit, const Budgets& budgets) {
  for (std::int64_t t = 1; t < limit; ++t) {
    const auto present = variables_present(w, t, budgets);
    for (std::size_t i : indices) {
      if (std::find(present.begin(), present.end(), i) != present.end()) return false;
    }
  }
  return true;
}

std::vector<std::size_t> indices_of_weight(const Weights& w, Weight value) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == value) out.push_back(i);
  }
  return out;
}

std::string join_indices(std::span<const std::size_t> indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) out += (i ? "," : "") + std::to_string(indices[i]);
  return out + "}";
}

}  // namespace

bool FamilyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool AggregateReport::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const FamilyReport& r) { return r.passed(); });
}

FamilyReport canonical_family(std::int64_t k, std::int64_t l, const Budgets& budgets) {
  if (k < 2) throw InvalidInput("canonical family needs k >= 2 (got k = " + str(k) + ")");
  if (l < 0) throw InvalidInput("canonical family needs l >= 0 (got l = " + str(l) + ")");
  if (k > 999 || l > 10'000) throw InvalidInput("canonical family parameters too large");

  std::vector<Weight> entries = repeated(k, k + 2);
  append(entries, repeated(k + 1, 2 * k - 1));
  append(entries, repeated(k * (k + 1), l));
  const std::int64_t d = (l + 3) * k * (k + 1);
  ReportBuilder out("prop", WeightedHypersurface(Weights(std::move(entries)), d));
  const Weights& w = out.x().weights();
  out.param("k", str(k));
  out.param("l", str(l));
  out.param("degree", str(d));
  out.param("dimension", str(out.x().dimension()));

  const bool wf = well_formed(w);
  out.check("well_formed", wf, wf ? "true" : "false");

  // one representative coordinate point per weight: 1/k, 1/(k+1), 1/k(k+1)
  std::vector<Weight> point_weights = {k, k + 1};
  if (l >= 1) point_weights.push_back(k * (k + 1));
  for (Weight a : point_weights) {
    const std::size_t index = indices_of_weight(w, a).front();
    const std::size_t single[] = {index};
    const auto type = stratum_quotient_type(w, single, index);
    const auto min = reid_tai_min(type, budgets);
    out.check("coordinate_point_canonical[1/" + str(a) + "]", min.value >= Rational(1),
              "min=" + min.value.to_string() + " at j=" + str(min.j));
  }
  const bool canonical = wf && ambient_canonical(w, budgets);
  out.check("ambient_canonical", canonical, canonical ? "true" : "false");
  const bool qs = quasi_smooth(out.x(), budgets);
  out.check("quasi_smooth", qs, qs ? "true" : "false");
  out.check("amplitude", out.x().amplitude() == 1, str(out.x().amplitude()));
  out.check("dimension", out.x().dimension() == 3 * k + l - 1,
            str(out.x().dimension()) + " = 3k+l-1 = " + str(3 * k + l - 1));

  const Rational vol = volume(out.x());
  const Rational closed_form(BigInt(l + 3), power(k, k + 1 + l) * power(k + 1, 2 * k - 2 + l));
  out.check("volume", vol == closed_form, vol.to_string() + " vs closed form " + closed_form.to_string());
  return out.take();
}

FamilyReport vanishing_plurigenera_witness(std::int64_t n, const Budgets& budgets) {
  if (n < 5) throw InvalidInput("vanishing-plurigenera witness needs n >= 5 (got n = " + str(n) + ")");
  const std::int64_t k = (n + 1) / 3;
  const std::int64_t l = n + 1 - 3 * k;
  const FamilyReport base = canonical_family(k, l, budgets);

  ReportBuilder out("thm3", base.hypersurface);
  out.param("n", str(n));
  out.param("k", str(k));
  out.param("l", str(l));
  out.param("degree", str(out.x().degree()));
  out.absorb(base);

  const auto plurigenera = plurigenera_table(out.x(), k, budgets);
  bool vanish = true;
  std::string listing;
  for (std::int64_t m = 1; m < k; ++m) {
    const BigInt& p = plurigenera[static_cast<std::size_t>(m - 1)];
    vanish = vanish && p == 0;
    listing += (m > 1 ? " " : "") + ("P_" + str(m) + "=" + p.str());
  }
  out.check("plurigenera_vanish_below_k", vanish, listing.empty() ? "(no m with 0 < m < k)" : listing);

  const std::int64_t threshold = vanishing_threshold(out.x(), budgets);
  out.check("vanishing_threshold", threshold >= k - 1, str(threshold) + " >= k-1 = " + str(k - 1));
  out.note("observed P_k = " + plurigenera.back().str() + " (reported, not asserted)");

  const Rational vol = volume(out.x());
  const Rational bound(power(3, n + 1), power(n - 1, n));
  out.check("volume_bound", vol < bound, vol.to_string() + " < " + bound.to_string());
  return out.take();
}

FamilyReport finite_map_obstruction_witness(std::int64_t n, const Budgets& budgets) {
  if (n < 7) throw InvalidInput("obstruction witness needs n >= 7 (got n = " + str(n) + ")");
  const std::int64_t k = (n - 1) / 3;
  const std::int64_t l = n + 1 - 3 * k;
  const FamilyReport base = canonical_family(k, l, budgets);

  ReportBuilder out("thm4", base.hypersurface);
  out.param("n", str(n));
  out.param("k", str(k));
  out.param("l", str(l));
  out.param("degree", str(out.x().degree()));
  out.absorb(base);

  const std::int64_t obstruction = k * (k + 1);
  const auto top = indices_of_weight(out.x().weights(), obstruction);
  out.param("obstruction_degree", str(obstruction));
  out.check("top_variables_count", static_cast<std::int64_t>(top.size()) == l,
            join_indices(top) + " has " + str(static_cast<std::int64_t>(top.size())) + " entries");
  out.check("top_variables_absent_below_obstruction", absent_below(out.x().weights(), top, obstruction, budgets),
            "z_i, i in " + join_indices(top) + ", absent for 1 <= t < " + str(obstruction));

  const Rational bound(BigInt(n * (n - 3)), BigInt(9));
  out.check("obstruction_bound", Rational(obstruction) >= bound, str(obstruction) + " >= " + bound.to_string());
  return out.take();
}

FamilyReport ample_witness(std::int64_t n, const Budgets& budgets) {
  if (n < 1) throw InvalidInput("ample witness needs n >= 1 (got n = " + str(n) + ")");
  if (n > 10'000) throw InvalidInput("ample witness dimension too large");
  const bool even = n % 2 == 0;
  const std::int64_t d = even ? n + 3 : n + 2;
  std::vector<Weight> entries = repeated(1, even ? n : n + 1);
  if (even) entries.push_back(2);
  entries.push_back(d);
  ReportBuilder out("ample", WeightedHypersurface(Weights(std::move(entries)), 2 * d));
  const Weights& w = out.x().weights();
  const std::size_t top = w.size() - 1;
  out.param("n", str(n));
  out.param("d", str(d));
  out.param("degree", str(2 * d));
  out.param("obstruction_degree", str(d));
  if (n == 1) out.note("n = 1: X_6 in P(1,1,3) is a genus-2 curve");
  out.note("equation shape z_" + str(static_cast<std::int64_t>(top)) + "^2 = P(other variables)");

  const bool wf = well_formed(w);
  out.check("well_formed", wf, wf ? "true" : "false");
  const bool qs = quasi_smooth(out.x(), budgets);
  out.check("quasi_smooth", qs, qs ? "true" : "false");
  out.check("amplitude", out.x().amplitude() == 1, str(out.x().amplitude()));
  out.check("dimension", out.x().dimension() == n, str(out.x().dimension()));

  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) continue;
    const bool missed = !contains_coordinate_point(out.x(), i);
    out.check("singular_point_missed[" + str(static_cast<std::int64_t>(i)) + "]", missed,
              str(w[i]) + (missed ? " divides " : " does not divide ") + str(2 * d));
  }
  const auto report = singularity_report(out.x(), budgets);
  const bool smooth = report.member_class == SingularityClass::Smooth;
  out.check("member_smooth", smooth,
            report.member_class ? std::string(to_string(*report.member_class)) : "not quasi-smooth");

  const std::size_t top_only[] = {top};
  out.check("top_variable_absent_below_obstruction", absent_below(w, top_only, d, budgets),
            "z_" + str(static_cast<std::int64_t>(top)) + " absent for 1 <= t < " + str(d));
  const auto at_d = variables_present(w, d, budgets);
  const bool appears = std::find(at_d.begin(), at_d.end(), top) != at_d.end();
  out.check("top_variable_present_at_obstruction", appears, "degree " + str(d));
  return out.take();
}

VolumeParameters volume_parameters(std::int64_t r, std::int64_t s, std::optional<std::int64_t> a,
                                   std::optional<std::int64_t> b) {
  if (r < 1 || s < 1) throw InvalidInput("volume r/s needs r, s >= 1");
  if (std::gcd(r, s) != 1) throw InvalidInput("volume r/s must be in lowest terms (gcd(r,s) = " + str(std::gcd(r, s)) + ")");
  if (r > 1'000'000 || s > 1'000'000) throw InvalidInput("volume numerator/denominator too large");

  VolumeParameters p{r, s, 0, 0, 0, 0, 0};
  if (b) {
    if (*b < 1 || (*b * r) % s != 1 % s) throw InvalidInput("b must satisfy b*r = 1 mod s");
    if (*b * r == 1) throw InvalidInput("b*r = 1 gives t = 0; no number of unit weights is then reachable");
    p.b = *b;
  } else {
    p.b = 1;
    while ((p.b * r) % s != 1 % s || p.b * r == 1) ++p.b;
  }
  p.t = (p.b * r - 1) / s;

  auto units = [&](std::int64_t a_value) { return r * a_value * p.b + 1 - a_value - s - p.b - 2; };
  if (a) {
    if (*a < 1 || std::gcd(*a, s) != 1 || std::gcd(*a, p.b) != 1) {
      throw InvalidInput("a must be positive with gcd(a,s) = gcd(a,b) = 1");
    }
    p.a = *a;
    if (units(p.a) < 1) throw InvalidInput("a too small: fewer than one unit weight");
  } else {
    const std::int64_t needed = std::max<std::int64_t>(s, 1);
    p.a = 1;
    while (std::gcd(p.a, s) != 1 || std::gcd(p.a, p.b) != 1 || units(p.a) < needed) ++p.a;
  }
  p.unit_weights = units(p.a);
  p.degree = r * p.a * p.b;
  return p;
}

FamilyReport volume_witness(std::int64_t r, std::int64_t s, std::optional<std::int64_t> a,
                            std::optional<std::int64_t> b, const Budgets& budgets) {
  const VolumeParameters p = volume_parameters(r, s, a, b);
  const std::int64_t m = p.unit_weights;
  const auto a_index = static_cast<std::size_t>(m);
  const auto s_index = a_index + 1;

  std::vector<Weight> entries = repeated(1, m);
  entries.insert(entries.end(), {p.a, p.s, p.b});
  WeightedHypersurface x(Weights(std::move(entries)), p.degree);
  if (p.s > 1) x = x.with_tangent_witness(s_index, a_index);

  ReportBuilder out("volume", x);
  const Weights& w = out.x().weights();
  const std::int64_t n = m + 2;
  out.param("r", str(p.r));
  out.param("s", str(p.s));
  out.param("a", str(p.a));
  out.param("b", str(p.b));
  out.param("t", str(p.t));
  out.param("unit_weights", str(m));
  out.param("n", str(n));
  out.param("degree", str(p.degree));
  out.param("member_dimension", str(out.x().dimension()));
  out.note("weights (1^(" + str(m) + ")," + str(p.a) + "," + str(p.s) + "," + str(p.b) + "): ambient dimension n = " +
           str(n) + ", member dimension n-1 = " + str(n - 1));

  out.check("amplitude", out.x().amplitude() == 1, str(out.x().amplitude()));
  out.check("weight_sum", w.sum() == p.degree - 1, str(w.sum()) + " = d-1 = " + str(p.degree - 1));
  out.check("congruence", (p.b * p.r) % p.s == 1 % p.s && p.b * p.r - 1 == p.t * p.s,
            "b*r - 1 = " + str(p.b * p.r - 1) + " = t*s");
  const bool wf = well_formed(w);
  out.check("well_formed", wf, wf ? "true" : "false");

  // Every weight but s divides d, so only the subset {z_s} needs the mixed monomial z_s^(ta) z_a.
  bool others_divide = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != s_index && p.degree % w[i] != 0) others_divide = false;
  }
  out.check("pure_powers_except_s", others_divide, "a_i | " + str(p.degree) + " for every i != " + str(static_cast<std::int64_t>(s_index)));
  if (p.s > 1) {
    const std::int64_t witness_degree = p.s * p.t * p.a + p.a;
    out.check("mixed_monomial_witness", witness_degree == p.degree && p.degree % p.s != 0,
              "deg z_s^" + str(p.t * p.a) + " z_a = " + str(witness_degree));
  }
  const bool qs = quasi_smooth(out.x(), budgets);
  out.check("quasi_smooth", qs, qs ? "true" : "false");

  const auto report = singularity_report(out.x(), budgets);
  std::vector<std::size_t> contained;
  for (const auto& entry : report.entries) {
    if (entry.incidence != Incidence::Missed) contained.push_back(entry.stratum.indices.front());
  }
  if (p.s > 1) {
    out.check("unique_singular_point", contained.size() == 1 && contained.front() == s_index,
              "met strata at " + join_indices(contained));
    std::vector<Weight> expected_entries = repeated(1, m);
    expected_entries.push_back(p.b);
    const CyclicQuotientSingularity expected(p.s, std::move(expected_entries));
    const StratumEntry* point = nullptr;
    for (const auto& entry : report.entries) {
      if (entry.stratum.indices.size() == 1 && entry.stratum.indices.front() == s_index) point = &entry;
    }
    const bool type_ok = point != nullptr && point->member_type == expected;
    out.check("member_type", type_ok,
              point && point->member_type ? to_string(*point->member_type, m > 24) : std::string("unavailable"));
    const bool terminal = point != nullptr && point->member_class == SingularityClass::Terminal;
    out.check("member_terminal", terminal,
              point && point->member_class ? std::string(to_string(*point->member_class)) : "unavailable");
  } else {
    out.check("member_smooth", report.member_class == SingularityClass::Smooth,
              report.member_class ? std::string(to_string(*report.member_class)) : "not quasi-smooth");
  }

  const Rational vol = volume(out.x());
  const Rational target(BigInt(p.r), BigInt(p.s));
  out.check("volume", vol == target, vol.to_string() + " = d/(asb) vs " + target.to_string());
  return out.take();
}

AggregateReport verify_all(const VerifyRanges& ranges, const Budgets& budgets) {
  if (ranges.k.first < 2) throw InvalidInput("canonical family needs k >= 2");
  if (ranges.l.first < 0) throw InvalidInput("canonical family needs l >= 0");
  for (const auto& [r, s] : ranges.volumes) {
    if (r < 1 || s < 1 || std::gcd(r, s) != 1) {
      throw InvalidInput("volume " + str(r) + "/" + str(s) + " is not a reduced positive fraction");
    }
  }

  std::vector<std::function<FamilyReport()>> jobs;
  for (std::int64_t k = ranges.k.first; k <= ranges.k.last; ++k) {
    for (std::int64_t l = ranges.l.first; l <= ranges.l.last; ++l) {
      jobs.emplace_back([=] { return canonical_family(k, l, budgets); });
    }
  }
  for (std::int64_t n = ranges.vanishing_n.first; n <= ranges.vanishing_n.last; ++n) {
    jobs.emplace_back([=] { return vanishing_plurigenera_witness(n, budgets); });
  }
  for (std::int64_t n = ranges.obstruction_n.first; n <= ranges.obstruction_n.last; ++n) {
    jobs.emplace_back([=] { return finite_map_obstruction_witness(n, budgets); });
  }
  for (std::int64_t n = ranges.ample_n.first; n <= ranges.ample_n.last; ++n) {
    jobs.emplace_back([=] { return ample_witness(n, budgets); });
  }
  for (const auto& [r, s] : ranges.volumes) {
    jobs.emplace_back([=, r = r, s = s] { return volume_witness(r, s, std::nullopt, std::nullopt, budgets); });
  }

  AggregateReport out;
  out.reports = detail::parallel_map(jobs.size(), budgets.search_jobs, [&](std::size_t i) { return jobs[i](); });
  return out;
}

}  // namespace wph

#include "wph/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "list_parse.hpp"
#include "wph/errors.hpp"

namespace wph {

namespace {

template <typename T>
void read_env(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  const Weight value = detail::parse_integer(raw, name);
  if (value < 0) throw InvalidInput(std::string(name) + " must be nonnegative");
  target = static_cast<T>(value);
}

}  // namespace

Budgets budgets_from_env() {
  Budgets b;
  read_env("WPH_TABLE_CAP", b.table_cap);
  read_env("WPH_SUBSET_CAP", b.subset_cap);
  read_env("WPH_RT_ORDER_CAP", b.reid_tai_order_cap);
  read_env("WPH_SEARCH_SUM_CAP", b.search_sum_cap);
  read_env("WPH_SEARCH_JOBS", b.search_jobs);
  return b;
}

// --- CyclicQuotientSingularity -------------------------------------------

CyclicQuotientSingularity::CyclicQuotientSingularity(Weight order, std::vector<Weight> weights)
    : order_(order), weights_(std::move(weights)) {
  if (order_ < 1) throw InvalidInput("quotient order must be positive");
  if (weights_.empty()) throw InvalidInput("quotient needs at least one weight");
  for (Weight b : weights_) {
    if (b < 0) throw InvalidInput("quotient weights must be nonnegative");
  }
}

std::vector<Weight> CyclicQuotientSingularity::residues() const {
  std::vector<Weight> out;
  out.reserve(weights_.size());
  for (Weight b : weights_) out.push_back(b % order_);
  std::sort(out.begin(), out.end());
  return out;
}

CyclicQuotientSingularity parse_quotient(std::string_view text) {
  const std::string_view body = detail::trim(text);
  const auto open = body.find('(');
  if (body.substr(0, 2) != "1/" || open == std::string_view::npos || body.back() != ')') {
    throw InvalidInput("malformed quotient literal '" + std::string(text) + "', expected 1/r(b,...)");
  }
  const Weight order = detail::parse_integer(body.substr(2, open - 2), text);
  return CyclicQuotientSingularity(order, detail::parse_integer_list(body.substr(open + 1, body.size() - open - 2)));
}

namespace {

std::string join_runs(std::span<const Weight> values, bool compact) {
  std::string out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const std::size_t run = j - i;
    if (compact && run >= 3) {
      if (!out.empty()) out += ',';
      out += std::to_string(values[i]) + "^" + std::to_string(run);
    } else {
      for (std::size_t t = 0; t < run; ++t) {
        if (!out.empty()) out += ',';
        out += std::to_string(values[i]);
      }
    }
    i = j;
  }
  return out;
}

}  // namespace

std::string to_string(const CyclicQuotientSingularity& s, bool compact) {
  return "1/" + std::to_string(s.order()) + "(" + join_runs(s.weights(), compact) + ")";
}

// --- Weights ---------------------------------------------------------------

Weights::Weights(std::vector<Weight> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw InvalidInput("a weight tuple needs at least two entries");
  for (Weight a : entries_) {
    if (a < 1) throw InvalidInput("weights must be positive");
    if (a > kMaxWeight) throw InvalidInput("weight exceeds " + std::to_string(kMaxWeight));
  }
}

Weight Weights::sum() const { return std::accumulate(entries_.begin(), entries_.end(), Weight{0}); }
Weight Weights::min() const { return *std::min_element(entries_.begin(), entries_.end()); }
Weight Weights::max() const { return *std::max_element(entries_.begin(), entries_.end()); }

std::vector<std::pair<Weight, std::size_t>> Weights::distinct() const {
  std::map<Weight, std::size_t> counts;
  for (Weight a : entries_) ++counts[a];
  return {counts.begin(), counts.end()};
}

Weights parse_weights(std::string_view text) { return Weights(detail::parse_integer_list(text)); }

std::string to_string(const Weights& w, bool compact) { return join_runs(w.entries(), compact); }

// --- arithmetic ------------------------------------------------------------

Weight gcd_list(std::span<const Weight> values) {
  if (values.empty()) throw InvalidInput("gcd of an empty list");
  Weight g = 0;
  for (Weight v : values) {
    if (v < 1) throw InvalidInput("gcd_list expects positive integers");
    g = std::gcd(g, v);
  }
  return g;
}

Weight smallest_residue(Weight x, Weight r) {
  if (r < 1) throw InvalidInput("residue modulus must be positive");
  const Weight m = x % r;
  return m < 0 ? m + r : m;
}

bool well_formed(const Weights& w) {
  // prefix/suffix gcds give every omit-one gcd in linear time
  const std::size_t n = w.size();
  std::vector<Weight> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = std::gcd(suffix[i + 1], w[i]);
  Weight prefix = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::gcd(prefix, suffix[i + 1]) != 1) return false;
    prefix = std::gcd(prefix, w[i]);
  }
  return true;
}

// --- strata ----------------------------------------------------------------

namespace {

void sort_strata(std::vector<StratumRecord>& strata) {
  std::sort(strata.begin(), strata.end(), [](const StratumRecord& x, const StratumRecord& y) {
    if (x.indices.size() != y.indices.size()) return x.indices.size() < y.indices.size();
    return x.indices < y.indices;
  });
}

}  // namespace

std::vector<StratumRecord> singular_strata(const Weights& w, const Budgets& budgets) {
  const std::size_t n = w.size();
  if (n > budgets.subset_cap || n >= 63) {
    throw BudgetExceeded("subset enumeration over " + std::to_string(n) + " coordinates exceeds cap " +
                         std::to_string(budgets.subset_cap));
  }
  std::vector<StratumRecord> out;
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Weight g = 0;
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        g = std::gcd(g, w[i]);
        indices.push_back(i);
      }
    }
    if (g > 1) out.push_back({std::move(indices), g});
  }
  sort_strata(out);
  return out;
}

std::vector<StratumRecord> closed_strata(const Weights& w) {
  std::set<Weight> candidates;
  for (const auto& [a, count] : w.distinct()) {
    for (Weight f = 1; f * f <= a; ++f) {
      if (a % f != 0) continue;
      if (f > 1) candidates.insert(f);
      candidates.insert(a / f);
    }
  }
  candidates.erase(1);

  std::vector<StratumRecord> out;
  for (Weight h : candidates) {
    StratumRecord record{{}, 0};
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] % h == 0) {
        record.indices.push_back(i);
        record.h = std::gcd(record.h, w[i]);
      }
    }
    if (record.h == h) out.push_back(std::move(record));
  }
  sort_strata(out);
  return out;
}

CyclicQuotientSingularity stratum_quotient_type(const Weights& w, std::span<const std::size_t> stratum,
                                                std::size_t k) {
  if (stratum.empty()) throw InvalidInput("empty stratum");
  Weight h = 0;
  bool has_k = false;
  for (std::size_t i : stratum) {
    if (i >= w.size()) throw InvalidInput("stratum index out of range");
    h = std::gcd(h, w[i]);
    has_k = has_k || i == k;
  }
  if (!has_k) throw InvalidInput("omitted coordinate " + std::to_string(k) + " is not in the stratum");
  if (h == 1) throw NoSingularity("stratum has gcd 1: no quotient singularity");
  std::vector<Weight> rest;
  rest.reserve(w.size() - 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != k) rest.push_back(w[i]);
  }
  return CyclicQuotientSingularity(h, std::move(rest));
}

std::vector<std::pair<std::size_t, CyclicQuotientSingularity>> coordinate_point_types(const Weights& w) {
  std::vector<std::pair<std::size_t, CyclicQuotientSingularity>> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] > 1) {
      const std::size_t single[] = {k};
      out.emplace_back(k, stratum_quotient_type(w, single, k));
    }
  }
  return out;
}

}  // namespace wph

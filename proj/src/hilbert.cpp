#include "wph/hilbert.hpp"

#include <stdexcept>
#include <string>

#include "wph/errors.hpp"

namespace wph {

namespace {

const BigInt kZero = 0;

void require_general_type(const WeightedHypersurface& x) {
  if (x.amplitude() <= 0) {
    throw InvalidInput("plurigenera are only computed for amplitude >= 1 (got " + std::to_string(x.amplitude()) +
                       ")");
  }
}

BigInt enumerate(std::span<const Weight> w, std::size_t pos, std::int64_t remaining) {
  if (pos + 1 == w.size()) return remaining % w[pos] == 0 ? 1 : 0;
  BigInt total = 0;
  for (std::int64_t left = remaining; left >= 0; left -= w[pos]) total += enumerate(w, pos + 1, left);
  return total;
}

}  // namespace

MonomialCountTable::MonomialCountTable(const Weights& weights, std::int64_t max_degree, const Budgets& budgets) {
  if (max_degree < 0) max_degree = 0;
  if (max_degree + 1 > budgets.table_cap) {
    throw BudgetExceeded("monomial table up to degree " + std::to_string(max_degree) + " exceeds cap " +
                         std::to_string(budgets.table_cap));
  }
  counts_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  counts_[0] = 1;
  // one coin-change pass per weight
  for (Weight a : weights) {
    for (std::int64_t m = a; m <= max_degree; ++m) {
      counts_[static_cast<std::size_t>(m)] += counts_[static_cast<std::size_t>(m - a)];
    }
  }
}

const BigInt& MonomialCountTable::operator()(std::int64_t m) const {
  if (m < 0) return kZero;
  if (m > max_degree()) throw std::out_of_range("degree " + std::to_string(m) + " beyond table");
  return counts_[static_cast<std::size_t>(m)];
}

BigInt monomial_count(const Weights& w, std::int64_t m, const Budgets& budgets) {
  if (m < 0) return 0;
  return MonomialCountTable(w, m, budgets)(m);
}

BigInt monomial_count_enum(std::span<const Weight> w, std::int64_t m) {
  if (w.empty() || w.size() > 8) throw BudgetExceeded("enumeration supports 1 to 8 weights");
  if (m > 200) throw BudgetExceeded("enumeration supports degrees up to 200");
  for (Weight a : w) {
    if (a < 1) throw InvalidInput("weights must be positive");
  }
  if (m < 0) return 0;
  return enumerate(w, 0, m);
}

BigInt monomial_count_enum(const Weights& w, std::int64_t m) { return monomial_count_enum(w.entries(), m); }

std::vector<std::size_t> variables_present(const Weights& w, std::int64_t t, const Budgets& budgets) {
  std::vector<std::size_t> present;
  if (t <= 0) return present;
  const MonomialCountTable table(w, t, budgets);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] <= t && table(t - w[i]) > 0) present.push_back(i);
  }
  return present;
}

BigInt plurigenus(const WeightedHypersurface& x, std::int64_t m, const Budgets& budgets) {
  require_general_type(x);
  if (m < 1) throw InvalidInput("plurigenus index must be positive");
  const std::int64_t degree = m * x.amplitude();
  const MonomialCountTable table(x.weights(), degree, budgets);
  return table(degree) - table(degree - x.degree());
}

std::vector<BigInt> plurigenera_table(const WeightedHypersurface& x, std::int64_t up_to, const Budgets& budgets) {
  require_general_type(x);
  std::vector<BigInt> out;
  if (up_to < 1) return out;
  const std::int64_t alpha = x.amplitude();
  const MonomialCountTable table(x.weights(), up_to * alpha, budgets);
  for (std::int64_t m = 1; m <= up_to; ++m) out.push_back(table(m * alpha) - table(m * alpha - x.degree()));
  return out;
}

std::int64_t vanishing_threshold(const WeightedHypersurface& x, const Budgets& budgets) {
  require_general_type(x);
  const std::int64_t alpha = x.amplitude();
  const std::int64_t cap = (10 * x.degree()) / alpha;
  std::int64_t scanned = 0;
  std::int64_t window = 8;
  while (scanned < cap) {
    const std::int64_t up_to = std::min(cap, scanned + window);
    const auto values = plurigenera_table(x, up_to, budgets);
    for (std::int64_t m = scanned + 1; m <= up_to; ++m) {
      if (values[static_cast<std::size_t>(m - 1)] != 0) return m - 1;
    }
    scanned = up_to;
    window *= 2;
  }
  throw EmptyResult("no nonzero plurigenus with m*alpha <= 10*d");
}

}  // namespace wph

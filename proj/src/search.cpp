#include "wph/search.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "parallel.hpp"
#include "wph/errors.hpp"
#include "wph/hilbert.hpp"
#include "wph/singularity.hpp"

namespace wph {

namespace {

void validate(const SearchOptions& options, const Budgets& budgets) {
  if (options.member_dim < 2) throw InvalidInput("search needs member dimension >= 2");
  if (options.member_dim > 60) throw InvalidInput("search member dimension too large");
  if (options.amplitude < 1) throw InvalidInput("search needs amplitude >= 1");
  if (options.max_weight_sum < 0) throw InvalidInput("search needs a nonnegative weight-sum bound");
  if (options.plurigenera_up_to < 0 || options.vanishing < 0) throw InvalidInput("negative plurigenera count");
  if (options.max_weight_sum > budgets.search_sum_cap) {
    throw BudgetExceeded("weight sum bound " + std::to_string(options.max_weight_sum) + " exceeds search cap " +
                         std::to_string(budgets.search_sum_cap));
  }
}

std::optional<SearchRecord> evaluate(const std::vector<Weight>& entries, const SearchOptions& options,
                                     const Budgets& budgets) {
  Weights w(entries);
  if (!well_formed(w)) return std::nullopt;
  WeightedHypersurface x(w, w.sum() + options.amplitude);
  if (!quasi_smooth(x, budgets)) return std::nullopt;
  const auto report = singularity_report(x, budgets);
  if (!report.member_class || !is_canonical(*report.member_class)) return std::nullopt;

  const std::int64_t up_to = std::max(options.plurigenera_up_to, options.vanishing);
  auto plurigenera = plurigenera_table(x, up_to, budgets);
  for (std::int64_t m = 0; m < options.vanishing; ++m) {
    if (plurigenera[static_cast<std::size_t>(m)] != 0) return std::nullopt;
  }
  return SearchRecord{w, x.degree(), x.amplitude(), volume(x), std::move(plurigenera), true, true, true,
                      report.ambient_canonical.value_or(false)};
}

}  // namespace

std::vector<SearchRecord> enumerate_candidates(const SearchOptions& options, const Budgets& budgets) {
  validate(options, budgets);
  const auto length = static_cast<std::size_t>(options.member_dim + 2);
  const Weight cap = options.max_weight_sum;
  const Weight max_leading = cap / static_cast<Weight>(length);

  auto per_leading = [&](std::size_t slot) {
    const Weight leading = static_cast<Weight>(slot) + 1;
    std::vector<SearchRecord> found;
    std::vector<Weight> entries{leading};
    std::function<void(Weight)> extend = [&](Weight used) {
      if (entries.size() == length) {
        if (auto record = evaluate(entries, options, budgets)) found.push_back(std::move(*record));
        return;
      }
      const auto remaining_slots = static_cast<Weight>(length - entries.size());
      // each remaining entry is at least the current one
      for (Weight next = entries.back(); used + next * remaining_slots <= cap; ++next) {
        entries.push_back(next);
        extend(used + next);
        entries.pop_back();
      }
    };
    extend(leading);
    return found;
  };

  const auto slots = max_leading > 0 ? static_cast<std::size_t>(max_leading) : 0;
  auto batches = detail::parallel_map(slots, budgets.search_jobs, per_leading);

  std::vector<SearchRecord> out;
  for (auto& batch : batches) {
    for (auto& record : batch) out.push_back(std::move(record));
  }
  std::sort(out.begin(), out.end(), [](const SearchRecord& x, const SearchRecord& y) {
    if (x.volume != y.volume) return x.volume < y.volume;
    return x.weights < y.weights;
  });
  return out;
}

SearchRecord find_min_volume(const SearchOptions& options, const Budgets& budgets) {
  auto records = enumerate_candidates(options, budgets);
  if (records.empty()) {
    throw EmptyResult("no record with weight sum <= " + std::to_string(options.max_weight_sum) +
                      " passes the filters");
  }
  return std::move(records.front());
}

}  // namespace wph

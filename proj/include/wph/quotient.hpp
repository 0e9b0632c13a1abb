#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wph {

using Weight = std::int64_t;

/// The cyclic quotient singularity 1/r(b_1,...,b_m): affine m-space modulo the
/// cyclic group of order r acting diagonally with weights b_i. Weights are kept
/// as given; they are only meaningful modulo r.
class CyclicQuotientSingularity {
 public:
  CyclicQuotientSingularity(Weight order, std::vector<Weight> weights);

  Weight order() const { return order_; }
  const std::vector<Weight>& weights() const { return weights_; }

  /// Weights reduced to [0, r), sorted ascending.
  std::vector<Weight> residues() const;

  friend bool operator==(const CyclicQuotientSingularity&, const CyclicQuotientSingularity&) = default;

 private:
  Weight order_;
  std::vector<Weight> weights_;
};

/// Parses literals such as "1/6(2,2,3)". Repetitions may be written "1^4".
CyclicQuotientSingularity parse_quotient(std::string_view text);

/// Formats as "1/r(b_1,...,b_m)". With `compact`, runs of three or more equal
/// weights print as "b^k" (accepted back by parse_quotient).
std::string to_string(const CyclicQuotientSingularity& s, bool compact = false);

}  // namespace wph

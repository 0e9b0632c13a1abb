#pragma once

// Test-only reference computations, written independently of the library's
// code paths (no residue histograms, no DP tables, no subset reductions).

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

// Reid-Tai minimum as (numerator, r) over every j, directly from the definition.
inline std::pair<i64, i64> reid_tai_min(i64 r, const std::vector<i64>& b) {
  i64 best = -1;
  for (i64 j = 1; j < r; ++j) {
    i64 sum = 0;
    for (i64 x : b) sum += (j * x) % r;
    if (best < 0 || sum < best) best = sum;
  }
  return {best, r};
}

// 0 NotCanonical, 1 CanonicalNotTerminal, 2 Terminal, 3 Smooth
inline int classify(i64 r, const std::vector<i64>& b) {
  if (r == 1) return 3;
  const auto [num, den] = reid_tai_min(r, b);
  if (num > den) return 2;
  if (num == den) return 1;
  return 0;
}

inline bool well_formed(const std::vector<i64>& w) {
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    i64 g = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != skip) g = std::gcd(g, w[i]);
    }
    if (g != 1) return false;
  }
  return true;
}

// Every exponent vector with sum e_i w_i == m.
inline std::vector<std::vector<i64>> monomials(const std::vector<i64>& w, i64 m) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> e(w.size(), 0);
  std::function<void(std::size_t, i64)> go = [&](std::size_t i, i64 left) {
    if (i == w.size()) {
      if (left == 0) out.push_back(e);
      return;
    }
    for (i64 k = 0; k * w[i] <= left; ++k) {
      e[i] = k;
      go(i + 1, left - k * w[i]);
    }
    e[i] = 0;
  };
  if (m >= 0) go(0, m);
  return out;
}

inline std::vector<i64> random_weights(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len, i64 max_entry) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<i64> entry(1, max_entry);
  std::vector<i64> w(len(rng));
  for (auto& a : w) a = entry(rng);
  return w;
}

}  // namespace oracle

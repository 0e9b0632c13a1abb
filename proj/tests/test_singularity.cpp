#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wph/core.hpp"
#include "wph/errors.hpp"
#include "wph/singularity.hpp"

using namespace wph;

namespace {

SingularityClass expected_class(int code) { return static_cast<SingularityClass>(code); }

Rational oracle_min(const CyclicQuotientSingularity& s) {
  const auto [num, den] = oracle::reid_tai_min(s.order(), s.weights());
  return Rational(BigInt(num), BigInt(den));
}

CyclicQuotientSingularity random_singularity(std::mt19937_64& rng) {
  std::uniform_int_distribution<Weight> order(2, 40);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  const Weight r = order(rng);
  std::uniform_int_distribution<Weight> entry(0, 3 * r);
  std::vector<Weight> b(len(rng));
  for (auto& x : b) x = entry(rng);
  return {r, b};
}

}  // namespace

TEST_CASE("reid_tai_sum") {
  const CyclicQuotientSingularity s(3, {1, 1});
  CHECK(reid_tai_sum(s, 1) == Rational(BigInt(2), BigInt(3)));
  CHECK(reid_tai_sum(s, 2) == Rational(BigInt(4), BigInt(3)));
  CHECK_THROWS_AS(reid_tai_sum(s, 0), InvalidInput);
  CHECK_THROWS_AS(reid_tai_sum(s, 3), InvalidInput);
}

TEST_CASE("reid_tai_min and classification of unit examples") {
  const CyclicQuotientSingularity a(2, {1, 1}), b(2, {1, 1, 1}), c(3, {1, 1});
  CHECK(reid_tai_min(a).value == Rational(1));
  CHECK(classify_quotient(a) == SingularityClass::CanonicalNotTerminal);
  CHECK(reid_tai_min(b).value == Rational(BigInt(3), BigInt(2)));
  CHECK(classify_quotient(b) == SingularityClass::Terminal);
  CHECK(reid_tai_min(c).value == Rational(BigInt(2), BigInt(3)));
  CHECK(reid_tai_min(c).j == 1);
  CHECK(classify_quotient(c) == SingularityClass::NotCanonical);
  CHECK(classify_quotient(parse_quotient("1/6(2,2,3)")) == expected_class(oracle::classify(6, {2, 2, 3})));
  CHECK(classify_quotient(CyclicQuotientSingularity(1, {1, 2})) == SingularityClass::Smooth);
  CHECK_THROWS_AS(reid_tai_min(CyclicQuotientSingularity(1, {1})), InvalidInput);

  Budgets tight;
  tight.reid_tai_order_cap = 10;
  CHECK_THROWS_AS(reid_tai_min(CyclicQuotientSingularity(11, {1, 1, 1}), tight), BudgetExceeded);
}

TEST_CASE("1/r(1,r-1) is canonical but not terminal") {
  for (Weight r = 2; r <= 50; ++r) {
    CAPTURE(r);
    CHECK(classify_quotient(CyclicQuotientSingularity(r, {1, r - 1})) == SingularityClass::CanonicalNotTerminal);
  }
}

TEST_CASE("Reid-Tai agrees with the definition on random singularities") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const auto s = random_singularity(rng);
    CAPTURE(to_string(s));
    CHECK(reid_tai_min(s).value == oracle_min(s));
    CHECK(classify_quotient(s) == expected_class(oracle::classify(s.order(), s.weights())));
    CHECK(is_canonical_quotient(s) == is_canonical(classify_quotient(s)));
  }
}

TEST_CASE("classification is invariant under permutation and reduction mod r") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_singularity(rng);
    const auto cls = classify_quotient(s);
    const auto min = reid_tai_min(s).value;

    auto permuted = s.weights();
    std::shuffle(permuted.begin(), permuted.end(), rng);
    const CyclicQuotientSingularity p(s.order(), permuted);
    CHECK(classify_quotient(p) == cls);
    CHECK(reid_tai_min(p).value == min);

    std::uniform_int_distribution<Weight> shift(0, 4);
    auto shifted = s.weights();
    for (auto& x : shifted) x += shift(rng) * s.order();
    const CyclicQuotientSingularity q(s.order(), shifted);
    CHECK(classify_quotient(q) == cls);
    CHECK(reid_tai_min(q).value == min);
  }
}

TEST_CASE("quasi_reflections") {
  // 1/4(2,1): j = 2 fixes the first coordinate and moves only the second.
  CHECK(quasi_reflections(CyclicQuotientSingularity(4, {2, 1})) == std::vector<Weight>{2});
  CHECK(quasi_reflections(CyclicQuotientSingularity(2, {1, 1})).empty());
  CHECK(quasi_reflections(CyclicQuotientSingularity(6, {2, 3})) == std::vector<Weight>{2, 3, 4});
}

TEST_CASE("ambient_canonical examples") {
  CHECK(ambient_canonical(Weights({1, 1, 1, 1})));
  CHECK(ambient_canonical(Weights({1, 1, 1, 2})));       // 1/2(1,1,1)
  CHECK_FALSE(ambient_canonical(Weights({1, 1, 3})));    // 1/3(1,1)
  CHECK(ambient_canonical(Weights({1, 1, 2})));          // 1/2(1,1)
  CHECK_FALSE(ambient_canonical(Weights({4, 5, 6, 7, 23})));
  CHECK_THROWS_AS(ambient_canonical(Weights({2, 2, 1})), NotWellFormed);
  CHECK_THROWS_AS(ambient_canonical_bruteforce(Weights({2, 2, 1})), NotWellFormed);
}

TEST_CASE("ambient_canonical holds on the canonical family weights") {
  for (Weight k = 2; k <= 6; ++k) {
    for (std::size_t l = 0; l <= 4; ++l) {
      std::vector<Weight> w(static_cast<std::size_t>(k + 2), k);
      w.insert(w.end(), static_cast<std::size_t>(2 * k - 1), k + 1);
      w.insert(w.end(), l, k * (k + 1));
      CAPTURE(k);
      CAPTURE(l);
      CHECK(ambient_canonical(Weights(w)));
      CHECK(ambient_canonical_bruteforce(Weights(w)));
    }
  }
}

TEST_CASE("ambient_canonical agrees with the stratum-by-stratum oracle") {
  std::size_t compared = 0;
  SUBCASE("exhaustive, length <= 4, entries <= 8") {
    for (std::size_t len = 2; len <= 4; ++len) {
      std::vector<Weight> w(len, 1);
      while (true) {
        const Weights ws(w);
        if (well_formed(ws)) {
          ++compared;
          CHECK(ambient_canonical(ws) == ambient_canonical_bruteforce(ws));
        }
        std::size_t i = 0;
        while (i < len && w[i] == 8) w[i++] = 1;
        if (i == len) break;
        ++w[i];
      }
    }
    CHECK(compared > 0);
  }
  SUBCASE("random, length <= 7, entries <= 12") {
    std::mt19937_64 rng(31);
    while (compared < 500) {
      const Weights w(oracle::random_weights(rng, 2, 7, 12));
      if (!well_formed(w)) continue;
      ++compared;
      CHECK(ambient_canonical(w) == ambient_canonical_bruteforce(w));
    }
  }
}

TEST_CASE("class names") {
  CHECK(to_string(SingularityClass::Terminal) == "Terminal");
  CHECK(to_string(SingularityClass::CanonicalNotTerminal) == "CanonicalNotTerminal");
  CHECK(is_canonical(SingularityClass::Smooth));
  CHECK_FALSE(is_terminal(SingularityClass::CanonicalNotTerminal));
}

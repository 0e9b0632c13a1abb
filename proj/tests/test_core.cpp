#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wph/core.hpp"
#include "wph/errors.hpp"
#include "wph/rational.hpp"
#include "wph/singularity.hpp"

using namespace wph;

namespace {
std::vector<std::size_t> idx(std::initializer_list<std::size_t> v) { return v; }
}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(BigInt(6), BigInt(-8));
  CHECK(a.to_string() == "-3/4");
  CHECK(a.denominator() == 4);
  CHECK((Rational(1) / Rational(420)).to_string() == "1/420");
  CHECK(Rational(BigInt(10), BigInt(5)).to_string() == "2");
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(parse_rational("22/7") == Rational(BigInt(22), BigInt(7)));
  CHECK(parse_rational("3") == Rational(3));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/x"), InvalidInput);
  CHECK(Rational(BigInt(1), BigInt(420)).to_decimal(6) == "0.002380");
  CHECK(Rational(BigInt(355), BigInt(113)).to_decimal(4) == "3.1415");
}

TEST_CASE("weights construction and parsing") {
  CHECK(parse_weights("4,5,6,7,23") == Weights({4, 5, 6, 7, 23}));
  CHECK(parse_weights("1^4, 5,2,3") == Weights({1, 1, 1, 1, 5, 2, 3}));
  CHECK(to_string(Weights({1, 1, 1, 1, 5, 2, 3}), true) == "1^4,5,2,3");
  CHECK(to_string(Weights({1, 1, 2})) == "1,1,2");
  CHECK_THROWS_AS(Weights({3}), InvalidInput);
  CHECK_THROWS_AS(Weights({1, 0, 2}), InvalidInput);
  CHECK_THROWS_AS(Weights({1, -2}), InvalidInput);
  CHECK_THROWS_AS(parse_weights("1,,2"), InvalidInput);
  CHECK_THROWS_AS(parse_weights("1,a"), InvalidInput);
}

TEST_CASE("gcd_list") {
  const std::vector<Weight> a{4, 6}, b{4, 5, 6, 7, 23}, c{6, 10, 15};
  CHECK(gcd_list(a) == 2);
  CHECK(gcd_list(b) == 1);
  CHECK(gcd_list(c) == 1);
  CHECK_THROWS_AS(gcd_list(std::vector<Weight>{}), InvalidInput);
}

TEST_CASE("smallest_residue") {
  CHECK(smallest_residue(7, 3) == 1);
  CHECK(smallest_residue(0, 5) == 0);
  // k = 5, j = 2: j(k+1) mod k = j
  CHECK(smallest_residue(2 * 6, 5) == 2);
  CHECK(smallest_residue(-1, 5) == 4);
  CHECK_THROWS_AS(smallest_residue(3, 0), InvalidInput);
}

TEST_CASE("well_formed") {
  CHECK(well_formed(Weights({1, 1, 1})));
  CHECK_FALSE(well_formed(Weights({1, 2, 2})));
  CHECK(well_formed(Weights({2, 2, 2, 2, 3, 3, 3, 6})));
  CHECK(well_formed(Weights({4, 5, 6, 7, 23})));
  CHECK_FALSE(well_formed(Weights({1, 3, 3})));
}

TEST_CASE("well_formed agrees with the omit-one oracle and ignores order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto w = oracle::random_weights(rng, 2, 7, 12);
    const bool expected = oracle::well_formed(w);
    CHECK(well_formed(Weights(w)) == expected);
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(well_formed(Weights(w)) == expected);
  }
}

TEST_CASE("singular_strata") {
  const auto s1 = singular_strata(Weights({1, 1, 2}));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0] == StratumRecord{{2}, 2});

  CHECK(singular_strata(Weights({1, 1, 1, 1})).empty());

  const auto s2 = singular_strata(Weights({4, 5, 6, 7, 23}));
  const std::vector<StratumRecord> expected{{{0}, 4}, {{1}, 5}, {{2}, 6}, {{3}, 7}, {{4}, 23}, {{0, 2}, 2}};
  CHECK(s2 == expected);

  Budgets tight;
  tight.subset_cap = 4;
  CHECK_THROWS_AS(singular_strata(Weights({1, 1, 1, 1, 2}), tight), BudgetExceeded);
}

TEST_CASE("singular_strata records are closed under gcd divisibility") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Weights w(oracle::random_weights(rng, 2, 7, 12));
    for (const auto& rec : singular_strata(w)) {
      CHECK(rec.h > 1);
      for (std::size_t i : rec.indices) CHECK(w[i] % rec.h == 0);
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] % rec.h != 0) CHECK(std::gcd(rec.h, w[j]) < rec.h);
      }
    }
  }
}

TEST_CASE("closed strata are the gcd closures of the singular strata") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Weights w(oracle::random_weights(rng, 2, 7, 12));
    const auto closed = closed_strata(w);
    for (const auto& rec : singular_strata(w)) {
      std::vector<std::size_t> closure;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] % rec.h == 0) closure.push_back(i);
      }
      const bool found = std::any_of(closed.begin(), closed.end(), [&](const StratumRecord& c) {
        return c.indices == closure && c.h == rec.h;
      });
      CHECK(found);
    }
    for (const auto& c : closed) {
      CHECK(std::find(singular_strata(w).begin(), singular_strata(w).end(), c) != singular_strata(w).end());
    }
  }
}

TEST_CASE("stratum_quotient_type") {
  const Weights w({4, 5, 6, 7, 23});
  CHECK(stratum_quotient_type(w, idx({0, 2}), 0) == CyclicQuotientSingularity(2, {5, 6, 7, 23}));
  CHECK(stratum_quotient_type(Weights({1, 1, 2}), idx({2}), 2) == CyclicQuotientSingularity(2, {1, 1}));
  CHECK(stratum_quotient_type(Weights({2, 2, 2, 2, 3, 3, 3, 6}), idx({7}), 7) ==
        CyclicQuotientSingularity(6, {2, 2, 2, 2, 3, 3, 3}));
  CHECK_THROWS_AS(stratum_quotient_type(w, idx({0, 2}), 1), InvalidInput);
  CHECK_THROWS_AS(stratum_quotient_type(w, idx({0, 1}), 0), NoSingularity);
}

TEST_CASE("the omitted coordinate of a stratum does not change the Reid-Tai minimum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Weights w(oracle::random_weights(rng, 2, 7, 12));
    for (const auto& rec : singular_strata(w)) {
      const auto reference = reid_tai_min(stratum_quotient_type(w, rec.indices, rec.indices.front())).value;
      for (std::size_t k : rec.indices) {
        CHECK(reid_tai_min(stratum_quotient_type(w, rec.indices, k)).value == reference);
      }
    }
  }
}

TEST_CASE("coordinate_point_types") {
  CHECK(coordinate_point_types(Weights({1, 1, 1, 1})).empty());
  const auto types = coordinate_point_types(Weights({1, 1, 2, 5}));
  REQUIRE(types.size() == 2);
  CHECK(types[0].first == 2);
  CHECK(types[0].second == CyclicQuotientSingularity(2, {1, 1, 5}));
  CHECK(types[1].first == 3);
  CHECK(types[1].second == CyclicQuotientSingularity(5, {1, 1, 2}));

  const auto prop = coordinate_point_types(Weights({2, 2, 2, 2, 3, 3, 3}));
  REQUIRE(prop.size() == 7);
  for (const auto& [k, type] : prop) CHECK(type.order() == (k < 4 ? 2 : 3));
}

TEST_CASE("coordinate_point_types equals the singleton strata") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const Weights w(oracle::random_weights(rng, 2, 7, 12));
    std::vector<std::pair<std::size_t, CyclicQuotientSingularity>> from_strata;
    for (const auto& rec : singular_strata(w)) {
      if (rec.indices.size() == 1) {
        from_strata.emplace_back(rec.indices[0], stratum_quotient_type(w, rec.indices, rec.indices[0]));
      }
    }
    CHECK(coordinate_point_types(w) == from_strata);
  }
}

TEST_CASE("quotient literals") {
  const auto s = parse_quotient("1/6(2,2,3)");
  CHECK(s.order() == 6);
  CHECK(s.weights() == std::vector<Weight>{2, 2, 3});
  CHECK(to_string(s) == "1/6(2,2,3)");
  CHECK(parse_quotient("1/2(1^4,3)") == CyclicQuotientSingularity(2, {1, 1, 1, 1, 3}));
  CHECK(to_string(CyclicQuotientSingularity(2, {1, 1, 1, 1, 3}), true) == "1/2(1^4,3)");
  CHECK_THROWS_AS(parse_quotient("6(2,2)"), InvalidInput);
  CHECK_THROWS_AS(parse_quotient("1/0(1)"), InvalidInput);
  CHECK_THROWS_AS(parse_quotient("1/3()"), InvalidInput);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "funding/valuation.hpp"

using namespace funding;

TEST_CASE("validate accepts concave nondecreasing normalized tables") {
  CHECK(validate(Valuation{{0, 5, 8, 9}}).ok);
  CHECK(validate(Valuation{{0, 0, 0}}).ok);
  CHECK(validate(Valuation{{0, 2, 4, 6}}).ok);  // linear is concave
}

TEST_CASE("validate reports the first failing index and invariant") {
  auto concave = validate(Valuation{{0, 3, 7}});
  CHECK_FALSE(concave.ok);
  CHECK(concave.index == 2);
  CHECK(concave.reason.find("concavity") != std::string::npos);

  auto norm = validate(Valuation{{1, 2, 3}});
  CHECK_FALSE(norm.ok);
  CHECK(norm.index == 0);
  CHECK(norm.reason.find("normalization") != std::string::npos);

  auto mono = validate(Valuation{{0, 5, 4, 4}});
  CHECK_FALSE(mono.ok);
  CHECK(mono.index == 2);
  CHECK(mono.reason.find("monotonicity") != std::string::npos);
}

TEST_CASE("marginal shifts and shrinks the domain") {
  Valuation v{{0, 5, 8, 9}};
  CHECK(marginal(v, 0).values == std::vector<double>{0, 5, 8, 9});
  CHECK(marginal(v, 1).values == std::vector<double>{0, 3, 4});
  CHECK(marginal(v, 3).values == std::vector<double>{0});
  CHECK_THROWS_AS(marginal(v, 4), std::domain_error);
  CHECK_THROWS_AS(marginal(v, -1), std::domain_error);
}

TEST_CASE("marginal telescopes and preserves the invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 12);
    auto instance = gen_random_concave(m, 1, rng(), 5.0);
    const auto& v = instance.valuations[0];
    for (int a = 0; a <= m; ++a) {
      auto shifted = marginal(v, a);
      CHECK(validate(shifted).ok);
      for (int b = 0; a + b <= m; ++b) {
        // subtraction order differs, so allow rounding in the last place
        const auto lhs = marginal(shifted, b).values;
        const auto rhs = marginal(v, a + b).values;
        REQUIRE(lhs.size() == rhs.size());
        for (size_t x = 0; x < lhs.size(); ++x)
          CHECK(lhs[x] == doctest::Approx(rhs[x]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("gen_random_concave is deterministic and always valid") {
  auto a = gen_random_concave(5, 2, 1, 10.0);
  auto b = gen_random_concave(5, 2, 1, 10.0);
  REQUIRE(a.num_players() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(validate(a.valuations[i]).ok);
    CHECK(a.valuations[i].values == b.valuations[i].values);
  }

  auto tiny = gen_random_concave(1, 1, 0, 1.0);
  CHECK(tiny.valuations[0].values[0] == 0.0);
  CHECK(tiny.valuations[0].values[1] >= 0.0);
  CHECK(tiny.valuations[0].values[1] <= 1.0);
}

TEST_CASE("gen_poa2_worstcase builds the two-player step/linear pair") {
  auto instance = gen_poa2_worstcase(10);
  CHECK(instance.m == 10);
  CHECK(instance.valuations[0].values[0] == 0.0);
  for (int x = 1; x <= 10; ++x) {
    CHECK(instance.valuations[0](x) == 10.0);
    CHECK(instance.valuations[1](x) == static_cast<double>(x));
  }
  CHECK(validate(instance).ok);

  auto small = gen_poa2_worstcase(2);
  CHECK(small.valuations[0].values == std::vector<double>{0, 2, 2});
  CHECK(small.valuations[1].values == std::vector<double>{0, 1, 2});

  CHECK_THROWS_AS(gen_poa2_worstcase(1), std::domain_error);
}

TEST_CASE("gen_unbounded_worstcase builds n near-unit-value players") {
  auto instance = gen_unbounded_worstcase(3, 0.01);
  CHECK(instance.m == 3);
  REQUIRE(instance.num_players() == 3);
  for (const auto& v : instance.valuations) {
    CHECK(v.values == std::vector<double>{0, 1.01, 1.02, 1.03});
  }
  CHECK(validate(instance).ok);

  auto solo = gen_unbounded_worstcase(1, 0.5);
  CHECK(solo.m == 1);
  CHECK(solo.num_players() == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "funding/multiround.hpp"

using namespace funding;

TEST_CASE("ratio-t bundle sizing, strict and rounded") {
  CHECK(bundle_sizes_ratio_t(60, 3).bundle_sizes == std::vector<int>{10, 20, 30});
  CHECK(bundle_sizes_ratio_t(6, 1).bundle_sizes == std::vector<int>{6});

  CHECK_THROWS_WITH_AS(bundle_sizes_ratio_t(7, 3),
                       "bundle_sizes_ratio_t: m must be a multiple of 6 for strict "
                       "ratio-t sizing",
                       std::domain_error);

  for (int m = 1; m <= 40; ++m)
    for (int k = 1; k <= 5; ++k) {
      auto config = bundle_sizes_ratio_t(m, k, SizingMode::kRounded);
      CHECK(config.total_items() == m);
      for (int t = 1; t < k; ++t)
        CHECK(config.bundle_sizes[t] >= config.bundle_sizes[t - 1]);
    }
}

TEST_CASE("k=1 reduces to the single-round game") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 20);
    const int n = 1 + static_cast<int>(rng() % 4);
    auto instance = gen_random_concave(m, n, rng(), 10.0);
    const auto trace = run_multiround(instance, bundle_sizes_ratio_t(m, 1));
    const auto eq = compute_nash(instance);
    CHECK(trace_welfare(instance, trace) ==
          doctest::Approx(social_welfare(instance, eq.allocation)).epsilon(1e-12));
  }
}

TEST_CASE("two-round play on the worst case stays within 1 + 1/k") {
  auto instance = gen_poa2_worstcase(12);
  MultiRoundConfig config{{4, 8}};
  const auto trace = run_multiround(instance, config);
  CHECK(check_lemma_descdelta(trace));
  CHECK(check_lemma_bound(instance, trace));
  CHECK(poa_ratio(instance, trace) <= 1.5 + 1e-9);
}

TEST_CASE("traces satisfy the per-round welfare sandwich and allocate full bundles") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    auto instance = gen_random_concave(60, n, rng(), 10.0);
    const auto trace = run_multiround(instance, bundle_sizes_ratio_t(60, 3));
    CHECK(check_lemma_descdelta(trace));
    CHECK(check_lemma_bound(instance, trace));
    double prev = std::numeric_limits<double>::infinity();
    for (size_t t = 0; t < trace.rounds.size(); ++t) {
      const auto& round = trace.rounds[t];
      CHECK(round.delta <= prev + 1e-12);
      prev = round.delta;
      const int allocated =
          std::accumulate(round.allocation.begin(), round.allocation.end(), 0);
      if (round.delta > 0) CHECK(allocated == trace.bundle_sizes[t]);
    }
    CHECK(trace.final_delta <= prev + 1e-12);
  }
}

TEST_CASE("lemma checks reject hand-built violations") {
  RoundTrace bogus;
  bogus.bundle_sizes = {4};
  RoundRecord record;
  record.delta = 1.0;
  record.welfare = 2.0;  // per-item 0.5
  record.cumulative = {0};
  bogus.rounds.push_back(record);
  bogus.final_delta = 0.9;  // violates sw/m >= Delta^{k+1}
  CHECK_FALSE(check_lemma_descdelta(bogus));
  bogus.final_delta = 0.3;
  CHECK(check_lemma_descdelta(bogus));
}

TEST_CASE("poa_ratio matches the worst case and the identical-linear optimum") {
  auto poa2 = gen_poa2_worstcase(10);
  const auto trace = run_multiround(poa2, bundle_sizes_ratio_t(10, 1));
  CHECK(poa_ratio(poa2, trace) == doctest::Approx(1.9).epsilon(1e-12));

  // two identical linear players split the items; the split is optimal
  GameInstance linear{6,
                      {Valuation{{0, 1, 2, 3, 4, 5, 6}}, Valuation{{0, 1, 2, 3, 4, 5, 6}}}};
  const auto lin_trace = run_multiround(linear, bundle_sizes_ratio_t(6, 1));
  CHECK(poa_ratio(linear, lin_trace) == doctest::Approx(1.0).epsilon(1e-12));

  GameInstance zeros{2, {Valuation{{0, 0, 0}}, Valuation{{0, 0, 0}}}};
  const auto zero_trace = run_multiround(zeros, bundle_sizes_ratio_t(2, 1));
  CHECK(std::isinf(poa_ratio(zeros, zero_trace)));
  CHECK(check_lemma_descdelta(zero_trace));
  CHECK(check_lemma_bound(zeros, zero_trace));
}

TEST_CASE("bundle sizes must sum to the instance total") {
  auto instance = gen_poa2_worstcase(10);
  CHECK_THROWS_AS(run_multiround(instance, MultiRoundConfig{{4, 4}}), std::invalid_argument);
}

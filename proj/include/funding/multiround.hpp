#pragma once

#include <vector>

#include "funding/equilibrium.hpp"
#include "funding/mechanism.hpp"
#include "funding/valuation.hpp"

namespace funding {

enum class SizingMode { kStrict, kRounded };

struct MultiRoundConfig {
  std::vector<int> bundle_sizes;  // m^1..m^k

  int rounds() const { return static_cast<int>(bundle_sizes.size()); }
  int total_items() const;
};

struct RoundRecord {
  StrategyProfile requests;
  Allocation allocation;
  std::vector<int> cumulative;  // alpha_i^t after this round
  double welfare = 0.0;         // sw(s^t), in round-t marginal values
  double delta = 0.0;           // max marginal value of one item entering round t
};

struct RoundTrace {
  std::vector<int> bundle_sizes;
  std::vector<RoundRecord> rounds;
  double final_delta = 0.0;  // Delta^{k+1}

  const std::vector<int>& final_counts() const { return rounds.back().cumulative; }
};

// Bundle sizes with m^t / m^1 = t. Strict mode requires m divisible by
// k(k+1)/2; rounded mode floors the ideal sizes and hands the remainder to
// the latest rounds first, keeping later bundles weakly larger.
MultiRoundConfig bundle_sizes_ratio_t(int m, int k, SizingMode mode = SizingMode::kStrict);

// Play the k-round game: each round is the single-round game on the round's
// bundle with marginal valuations, resolved by the equilibrium construction
// and greedy allocation. Rounds where every marginal value is zero are
// skipped (no items could raise welfare).
RoundTrace run_multiround(const GameInstance& instance, const MultiRoundConfig& config);

// Delta^t >= sw(s^t)/m^t >= Delta^{t+1} for every round.
bool check_lemma_descdelta(const RoundTrace& trace, double tol = 1e-9);

// sw(OPT) <= sw(s) + Delta^{k+1} * sum_t (m^t - sw(s^t)/Delta^t); rounds
// with Delta^t = 0 contribute m^t with the quotient taken as 0.
bool check_lemma_bound(const GameInstance& instance, const RoundTrace& trace,
                       double tol = 1e-9);

// Final welfare sum_i v_i(alpha_i^k) of a trace.
double trace_welfare(const GameInstance& instance, const RoundTrace& trace);

// dp_optimal_value / trace welfare; +infinity when the trace earned nothing.
double poa_ratio(const GameInstance& instance, const RoundTrace& trace);

}  // namespace funding

#include "funding/multiround.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace funding {

int MultiRoundConfig::total_items() const {
  return std::accumulate(bundle_sizes.begin(), bundle_sizes.end(), 0);
}

MultiRoundConfig bundle_sizes_ratio_t(int m, int k, SizingMode mode) {
  if (k < 1 || m < 1) throw std::domain_error("bundle_sizes_ratio_t: m, k >= 1");
  const int triangle = k * (k + 1) / 2;
  MultiRoundConfig config;
  config.bundle_sizes.resize(static_cast<size_t>(k));
  if (mode == SizingMode::kStrict) {
    if (m % triangle != 0)
      throw std::domain_error("bundle_sizes_ratio_t: m must be a multiple of " +
                              std::to_string(triangle) + " for strict ratio-t sizing");
    const int m1 = m / triangle;
    for (int t = 1; t <= k; ++t) config.bundle_sizes[t - 1] = t * m1;
  } else {
    int assigned = 0;
    for (int t = 1; t <= k; ++t) {
      config.bundle_sizes[t - 1] = static_cast<int>(
          (static_cast<long long>(t) * m) / triangle);
      assigned += config.bundle_sizes[t - 1];
    }
    // leftover items go to the latest rounds first
    for (int t = k; assigned < m; t = (t > 1 ? t - 1 : k)) {
      ++config.bundle_sizes[t - 1];
      ++assigned;
    }
  }
  return config;
}

namespace {

// Round game: marginal valuations truncated to the round's bundle size.
GameInstance round_game(const GameInstance& instance, const std::vector<int>& cumulative,
                        int bundle) {
  GameInstance game;
  game.m = bundle;
  game.valuations.reserve(instance.valuations.size());
  for (int i = 0; i < instance.num_players(); ++i) {
    Valuation shifted = marginal(instance.valuations[i], cumulative[i]);
    shifted.values.resize(static_cast<size_t>(bundle) + 1);
    game.valuations.push_back(std::move(shifted));
  }
  return game;
}

double max_marginal_one_item(const GameInstance& instance, const std::vector<int>& cumulative) {
  double best = 0.0;
  for (int i = 0; i < instance.num_players(); ++i) {
    const int a = cumulative[i];
    if (a >= instance.m) continue;
    best = std::max(best, instance.valuations[i](a + 1) - instance.valuations[i](a));
  }
  return best;
}

}  // namespace

RoundTrace run_multiround(const GameInstance& instance, const MultiRoundConfig& config) {
  if (config.total_items() != instance.m)
    throw std::invalid_argument("run_multiround: bundle sizes must sum to m");
  const int n = instance.num_players();
  RoundTrace trace;
  trace.bundle_sizes = config.bundle_sizes;
  std::vector<int> cumulative(static_cast<size_t>(n), 0);
  for (int bundle : config.bundle_sizes) {
    RoundRecord record;
    record.delta = max_marginal_one_item(instance, cumulative);
    if (record.delta > 0.0) {
      const GameInstance game = round_game(instance, cumulative, bundle);
      const EquilibriumResult eq = compute_nash(game);
      record.requests = eq.profile;
      record.allocation = eq.allocation;
      record.welfare = social_welfare(game, eq.allocation);
      for (int i = 0; i < n; ++i) cumulative[i] += eq.allocation[i];
    } else {
      record.requests.assign(static_cast<size_t>(n), Request{});
      record.allocation.assign(static_cast<size_t>(n), 0);
    }
    record.cumulative = cumulative;
    trace.rounds.push_back(std::move(record));
  }
  trace.final_delta = max_marginal_one_item(instance, cumulative);
  return trace;
}

bool check_lemma_descdelta(const RoundTrace& trace, double tol) {
  const int k = static_cast<int>(trace.rounds.size());
  for (int t = 0; t < k; ++t) {
    const double per_item = trace.rounds[t].welfare / trace.bundle_sizes[t];
    const double next_delta = (t + 1 < k) ? trace.rounds[t + 1].delta : trace.final_delta;
    if (trace.rounds[t].delta < per_item - tol) return false;
    if (per_item < next_delta - tol) return false;
  }
  return true;
}

bool check_lemma_bound(const GameInstance& instance, const RoundTrace& trace, double tol) {
  double slack = 0.0;
  for (size_t t = 0; t < trace.rounds.size(); ++t) {
    const double delta = trace.rounds[t].delta;
    const double quotient = delta > 0.0 ? trace.rounds[t].welfare / delta : 0.0;
    slack += trace.bundle_sizes[t] - quotient;
  }
  const double lhs = dp_optimal_value(instance);
  const double rhs = trace_welfare(instance, trace) + trace.final_delta * slack;
  return lhs <= rhs + tol * (1.0 + std::abs(rhs));
}

double trace_welfare(const GameInstance& instance, const RoundTrace& trace) {
  double sw = 0.0;
  const auto& counts = trace.final_counts();
  for (int i = 0; i < instance.num_players(); ++i)
    sw += instance.valuations[i](counts[i]);
  return sw;
}

double poa_ratio(const GameInstance& instance, const RoundTrace& trace) {
  const double sw = trace_welfare(instance, trace);
  if (sw <= 0.0) return std::numeric_limits<double>::infinity();
  return dp_optimal_value(instance) / sw;
}

}  // namespace funding

#include "funding/mechanism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace funding {

Allocation hrg_allocate(const StrategyProfile& profile, int m) {
  const int n = static_cast<int>(profile.size());
  std::vector<int> order;
  order.reserve(profile.size());
  for (int i = 0; i < n; ++i)
    if (profile[i].quantity > 0) order.push_back(i);
  // stable sort keeps lower player index first on equal ratios
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ratio_greater(profile[a], profile[b]);
  });
  Allocation alloc(profile.size(), 0);
  int remaining = m;
  for (int i : order) {
    if (remaining == 0) break;
    alloc[i] = std::min(profile[i].quantity, remaining);
    remaining -= alloc[i];
  }
  return alloc;
}

double payoff(const GameInstance& instance, const Allocation& allocation, int player) {
  if (player < 0 || player >= instance.num_players())
    throw std::domain_error("payoff: player index out of range");
  return instance.valuations[player](allocation[player]);
}

Allocation optimal_knapsack_mechanism(const StrategyProfile& profile, int m) {
  const int n = static_cast<int>(profile.size());
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  // best[i][c]: max declared value achievable with requests i..n-1 and capacity c
  std::vector<std::vector<double>> best(static_cast<size_t>(n) + 1,
                                        std::vector<double>(static_cast<size_t>(m) + 1, 0.0));
  for (int i = n - 1; i >= 0; --i) {
    const int q = profile[i].quantity;
    const double val = profile[i].declared_value;
    for (int c = 0; c <= m; ++c) {
      double take = (q > 0 && q <= c) ? val + best[i + 1][c - q] : kNegInf;
      best[i][c] = std::max(best[i + 1][c], take);
    }
  }
  Allocation alloc(profile.size(), 0);
  int c = m;
  for (int i = 0; i < n; ++i) {
    const int q = profile[i].quantity;
    if (q == 0 || q > c) continue;
    // include the lower-index player whenever the value ties
    if (profile[i].declared_value + best[i + 1][c - q] >= best[i + 1][c]) {
      alloc[i] = q;
      c -= q;
    }
  }
  return alloc;
}

Allocation optimal_allocation(const GameInstance& instance) {
  if (auto r = validate(instance); !r)
    throw std::domain_error("optimal_allocation: invalid instance (" + r.reason + ")");
  const int n = instance.num_players();
  Allocation alloc(static_cast<size_t>(n), 0);
  for (int placed = 0; placed < instance.m; ++placed) {
    int best = -1;
    double best_gain = 0.0;
    for (int i = 0; i < n; ++i) {
      if (alloc[i] == instance.m) continue;
      const double gain = instance.valuations[i](alloc[i] + 1) - instance.valuations[i](alloc[i]);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best < 0) break;  // all marginals zero
    ++alloc[best];
  }
  return alloc;
}

double dp_optimal_value(const GameInstance& instance) {
  const int m = instance.m;
  std::vector<double> dp(static_cast<size_t>(m) + 1, 0.0);
  std::vector<double> next(static_cast<size_t>(m) + 1);
  for (const auto& v : instance.valuations) {
    for (int c = 0; c <= m; ++c) {
      double best = dp[c];  // x = 0
      for (int x = 1; x <= c; ++x) {
        const double cand = dp[c - x] + v(x);
        if (cand > best) best = cand;
      }
      next[c] = best;
    }
    dp.swap(next);
  }
  return dp[m];
}

double social_welfare(const GameInstance& instance, const Allocation& allocation) {
  double sw = 0.0;
  for (int i = 0; i < instance.num_players(); ++i)
    sw += instance.valuations[i](allocation[i]);
  return sw;
}

}  // namespace funding

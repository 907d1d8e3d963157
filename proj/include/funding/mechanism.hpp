#pragma once

#include <vector>

#include "funding/valuation.hpp"

namespace funding {

// A request (quantity, declared value); the strategy in the one-shot game.
struct Request {
  int quantity = 0;
  double declared_value = 0.0;

  friend bool operator==(const Request& a, const Request& b) {
    return a.quantity == b.quantity && a.declared_value == b.declared_value;
  }
};

using StrategyProfile = std::vector<Request>;
using Allocation = std::vector<int>;

// Ratio comparison a.declared/a.quantity > b.declared/b.quantity via
// cross multiplication, exact regardless of rounding.
inline bool ratio_greater(const Request& a, const Request& b) {
  return a.declared_value * b.quantity > b.declared_value * a.quantity;
}

// Highest Ratio Greedy: grant requests in descending value-per-item order,
// ties to the lower player index, the cut-off request satisfied partially
// with the leftover items.
Allocation hrg_allocate(const StrategyProfile& profile, int m);

// True value the player derives from its allocated count.
double payoff(const GameInstance& instance, const Allocation& allocation, int player);

// 0/1 knapsack over the requests: each player gets exactly its requested
// quantity or nothing, maximizing total declared value; equal-value ties
// resolved by including lower-index players first.
Allocation optimal_knapsack_mechanism(const StrategyProfile& profile, int m);

// Full-information optimum: greedy on per-item marginal values, optimal
// under diminishing returns.
Allocation optimal_allocation(const GameInstance& instance);

// Independent oracle: multiple-choice knapsack DP over (player, items used),
// correct for arbitrary monotone valuations.
double dp_optimal_value(const GameInstance& instance);

double social_welfare(const GameInstance& instance, const Allocation& allocation);

}  // namespace funding

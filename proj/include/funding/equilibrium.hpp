#pragma once

#include <cstdint>

#include "funding/mechanism.hpp"
#include "funding/valuation.hpp"

namespace funding {

struct EquilibriumResult {
  StrategyProfile profile;
  Allocation allocation;
  std::vector<int> certified;  // alpha_i per player
  bool degenerate = false;     // all valuations identically zero
};

struct DynamicsResult {
  StrategyProfile profile;
  bool converged = false;
  int rounds_used = 0;
};

// Valuation-lookup instrumentation for complexity measurements.
std::uint64_t lookup_count();
void reset_lookup_count();

// True iff at least alpha items survive for player i's request
// (alpha, v_i(alpha)) against worst-case competing requests: players before
// i compete at ratio >= i's, players after at ratio strictly greater.
bool is_satisfiable(const GameInstance& instance, int player, int alpha);

// Per-player binary search for the largest satisfiable request; the
// resulting profile is a Nash equilibrium in which every player receives
// exactly its certified count and all items are allocated.
EquilibriumResult compute_nash(const GameInstance& instance);

// Exhaustive unilateral-deviation check over truthful requests (x', v_i(x')).
// value_grid > 0 additionally sweeps declared values j/value_grid * v_i(x');
// under greedy allocation the truthful declaration weakly dominates, this
// mode exists to validate that reduction on small instances.
bool verify_nash(const GameInstance& instance, const StrategyProfile& profile,
                 int value_grid = 0);

// Payoff-maximizing truthful request for `player` against fixed opponents,
// ties toward the smaller quantity.
Request best_response(const GameInstance& instance, const StrategyProfile& profile,
                      int player);

// Round-robin best responses until a full pass changes nothing or
// max_rounds passes elapse.
DynamicsResult best_response_dynamics(const GameInstance& instance,
                                      const StrategyProfile& initial, int max_rounds);

// (1,1)-smoothness inequality for the greedy mechanism: with O the optimal
// strategy choice for v, checks
//   sum_i u_i(v_i; o_i, s_-i) >= sw(v; O(v)) - sw(w; s).
// s must be valid with respect to both valuation profiles.
bool smoothness_check(const GameInstance& v, const GameInstance& w,
                      const StrategyProfile& s);

// Variant taking a precomputed optimal strategy profile for v, for
// exhaustive sweeps that reuse O(v) across many (w, s).
bool smoothness_check(const GameInstance& v, const GameInstance& w,
                      const StrategyProfile& s, const StrategyProfile& optimal_choice);

}  // namespace funding

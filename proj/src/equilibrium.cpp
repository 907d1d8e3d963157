#include "funding/equilibrium.hpp"

#include <stdexcept>

namespace funding {

namespace {

std::uint64_t g_lookup_count = 0;

double val(const GameInstance& instance, int player, int x) {
  ++g_lookup_count;
  return instance.valuations[player](x);
}

// Largest x in 1..m with v_j(x)/x >= num/den (or strictly > when strict),
// 0 if none. Ratio is nonincreasing in x for concave normalized valuations,
// so binary search applies.
int max_competing_request(const GameInstance& instance, int j, double num, double den,
                          bool strict) {
  auto holds = [&](int x) {
    const double lhs = val(instance, j, x) * den;
    const double rhs = num * static_cast<double>(x);
    return strict ? lhs > rhs : lhs >= rhs;
  };
  const int m = instance.m;
  if (!holds(1)) return 0;
  int lo = 1, hi = m;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (holds(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

std::uint64_t lookup_count() { return g_lookup_count; }
void reset_lookup_count() { g_lookup_count = 0; }

bool is_satisfiable(const GameInstance& instance, int player, int alpha) {
  if (alpha < 1 || alpha > instance.m)
    throw std::domain_error("is_satisfiable: alpha out of range");
  const double num = val(instance, player, alpha);
  const double den = static_cast<double>(alpha);
  long long committed = 0;
  const long long budget = instance.m - alpha;
  for (int j = 0; j < instance.num_players(); ++j) {
    if (j == player) continue;
    committed += max_competing_request(instance, j, num, den, /*strict=*/j > player);
    if (committed > budget) return false;
  }
  return true;
}

EquilibriumResult compute_nash(const GameInstance& instance) {
  if (auto r = validate(instance); !r)
    throw std::domain_error("compute_nash: invalid instance (" + r.reason + ")");
  const int n = instance.num_players();
  const int m = instance.m;
  EquilibriumResult result;
  result.certified.assign(static_cast<size_t>(n), 0);
  result.profile.assign(static_cast<size_t>(n), Request{});
  bool any_value = false;
  for (int i = 0; i < n; ++i) {
    if (!(val(instance, i, m) > 0.0)) continue;  // identically zero valuation
    any_value = true;
    // smallest alpha with positive value (v nondecreasing)
    int lo = 1, hi = m;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (val(instance, i, mid) > 0.0)
        hi = mid;
      else
        lo = mid + 1;
    }
    const int amin = lo;
    if (!is_satisfiable(instance, i, amin)) continue;
    lo = amin;
    hi = m;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (is_satisfiable(instance, i, mid))
        lo = mid;
      else
        hi = mid - 1;
    }
    result.certified[i] = lo;
    result.profile[i] = Request{lo, instance.valuations[i](lo)};
  }
  result.degenerate = !any_value;
  result.allocation = hrg_allocate(result.profile, m);
  return result;
}

bool verify_nash(const GameInstance& instance, const StrategyProfile& profile,
                 int value_grid) {
  constexpr double kTol = 1e-9;
  const int n = instance.num_players();
  const int m = instance.m;
  const Allocation base = hrg_allocate(profile, m);
  StrategyProfile trial = profile;
  for (int i = 0; i < n; ++i) {
    const double current = payoff(instance, base, i);
    for (int x = 0; x <= m; ++x) {
      const double truthful = instance.valuations[i](x);
      const int steps = (value_grid > 0 && x > 0) ? value_grid : 1;
      for (int g = steps; g >= 1; --g) {
        trial[i] = Request{x, truthful * g / steps};
        if (payoff(instance, hrg_allocate(trial, m), i) > current + kTol) return false;
      }
    }
    trial[i] = profile[i];
  }
  return true;
}

Request best_response(const GameInstance& instance, const StrategyProfile& profile,
                      int player) {
  const int m = instance.m;
  StrategyProfile trial = profile;
  Request best{0, 0.0};
  double best_payoff = 0.0;
  for (int x = 0; x <= m; ++x) {
    const Request candidate{x, instance.valuations[player](x)};
    trial[player] = candidate;
    const double u = payoff(instance, hrg_allocate(trial, m), player);
    if (u > best_payoff) {  // ties keep the smaller quantity
      best_payoff = u;
      best = candidate;
    }
  }
  return best;
}

DynamicsResult best_response_dynamics(const GameInstance& instance,
                                      const StrategyProfile& initial, int max_rounds) {
  if (max_rounds < 1) throw std::invalid_argument("best_response_dynamics: max_rounds >= 1");
  DynamicsResult result;
  result.profile = initial;
  for (int pass = 1; pass <= max_rounds; ++pass) {
    result.rounds_used = pass;
    bool changed = false;
    for (int i = 0; i < instance.num_players(); ++i) {
      const Request r = best_response(instance, result.profile, i);
      if (!(r == result.profile[i])) {
        result.profile[i] = r;
        changed = true;
      }
    }
    if (!changed) {
      result.converged = true;
      break;
    }
  }
  return result;
}

namespace {

void require_valid_for(const GameInstance& instance, const StrategyProfile& s,
                       const char* which) {
  for (int i = 0; i < instance.num_players(); ++i) {
    const auto& r = s[i];
    if (r.quantity < 0 || r.quantity > instance.m)
      throw std::invalid_argument("smoothness_check: request quantity out of range");
    if (r.quantity == 0 && r.declared_value != 0.0)
      throw std::invalid_argument("smoothness_check: zero-quantity request with value");
    if (r.declared_value > instance.valuations[i](r.quantity) + 1e-12)
      throw std::invalid_argument(std::string("smoothness_check: profile invalid w.r.t. ") + which);
  }
}

}  // namespace

bool smoothness_check(const GameInstance& v, const GameInstance& w,
                      const StrategyProfile& s, const StrategyProfile& optimal_choice) {
  require_valid_for(v, s, "v");
  require_valid_for(w, s, "w");
  const int n = v.num_players();
  const int m = v.m;
  double lhs = 0.0;
  StrategyProfile unilateral = s;
  for (int i = 0; i < n; ++i) {
    unilateral[i] = optimal_choice[i];
    lhs += payoff(v, hrg_allocate(unilateral, m), i);
    unilateral[i] = s[i];
  }
  double opt_welfare = 0.0;
  for (int i = 0; i < n; ++i) opt_welfare += optimal_choice[i].declared_value;
  const double sw_w_s = social_welfare(w, hrg_allocate(s, m));
  return lhs >= opt_welfare - sw_w_s - 1e-9;
}

bool smoothness_check(const GameInstance& v, const GameInstance& w,
                      const StrategyProfile& s) {
  const Allocation opt = optimal_allocation(v);
  StrategyProfile choice(opt.size());
  for (size_t i = 0; i < opt.size(); ++i)
    choice[i] = Request{opt[i], v.valuations[i](opt[i])};
  return smoothness_check(v, w, s, choice);
}

}  // namespace funding

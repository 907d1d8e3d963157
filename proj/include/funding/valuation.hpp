#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace funding {

// Tabulated value function on {0..m}: normalized at 0, nondecreasing,
// diminishing marginal returns.
struct Valuation {
  std::vector<double> values;

  Valuation() = default;
  explicit Valuation(std::vector<double> v) : values(std::move(v)) {}

  int max_items() const { return static_cast<int>(values.size()) - 1; }
  double operator()(int x) const { return values[static_cast<size_t>(x)]; }
};

struct GameInstance {
  int m = 0;
  std::vector<Valuation> valuations;

  int num_players() const { return static_cast<int>(valuations.size()); }
};

struct ValidationReport {
  bool ok = true;
  int index = -1;          // first failing point, -1 when ok
  std::string reason;      // which invariant failed

  explicit operator bool() const { return ok; }
};

// Tolerance absorbing rounding in generated increment tables.
inline constexpr double kConcavityTol = 1e-9;

ValidationReport validate(const Valuation& v, double tol = kConcavityTol);
ValidationReport validate(const GameInstance& instance, double tol = kConcavityTol);

// Value function shifted by `alpha` items already held:
// result(x) = v(x + alpha) - v(alpha), defined on 0..(m - alpha).
Valuation marginal(const Valuation& v, int alpha);

// Deterministic instance with concave valuations built from sorted
// descending increments.
GameInstance gen_random_concave(int m, int n, std::uint64_t seed, double max_increment);

// Two players: v1(x) = m for x > 0 (step function), v2(x) = x.
GameInstance gen_poa2_worstcase(int m);

// n players, m = n items, v(x) = 1 + x*eps for x > 0.
GameInstance gen_unbounded_worstcase(int n, double eps);

}  // namespace funding

#include "funding/valuation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace funding {

ValidationReport validate(const Valuation& v, double tol) {
  const auto& t = v.values;
  if (t.empty()) return {false, 0, "empty table"};
  if (t[0] != 0.0) return {false, 0, "normalization: v(0) != 0"};
  const int m = v.max_items();
  for (int x = 0; x < m; ++x) {
    if (t[x + 1] < t[x] - tol)
      return {false, x + 1, "monotonicity: v decreases"};
  }
  for (int x = 1; x < m; ++x) {
    const double lo = t[x] - t[x - 1];
    const double hi = t[x + 1] - t[x];
    if (hi > lo + tol)
      return {false, x + 1, "concavity: marginal increment grows"};
  }
  return {};
}

ValidationReport validate(const GameInstance& instance, double tol) {
  if (instance.m < 1) return {false, -1, "m must be >= 1"};
  if (instance.valuations.empty()) return {false, -1, "no players"};
  for (const auto& v : instance.valuations) {
    if (v.max_items() != instance.m)
      return {false, -1, "valuation domain does not match m"};
    if (auto r = validate(v, tol); !r) return r;
  }
  return {};
}

Valuation marginal(const Valuation& v, int alpha) {
  const int m = v.max_items();
  if (alpha < 0 || alpha > m)
    throw std::domain_error("marginal: alpha out of range");
  std::vector<double> out(static_cast<size_t>(m - alpha) + 1);
  for (int x = 0; x <= m - alpha; ++x) out[x] = v(x + alpha) - v(alpha);
  return Valuation{std::move(out)};
}

GameInstance gen_random_concave(int m, int n, std::uint64_t seed, double max_increment) {
  if (m < 1 || n < 1) throw std::domain_error("gen_random_concave: m, n >= 1");
  if (!(max_increment > 0)) throw std::domain_error("gen_random_concave: max_increment > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> inc(0.0, max_increment);
  GameInstance instance;
  instance.m = m;
  instance.valuations.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<double> steps(static_cast<size_t>(m));
    for (auto& s : steps) s = inc(rng);
    std::sort(steps.begin(), steps.end(), std::greater<>());
    std::vector<double> table(static_cast<size_t>(m) + 1, 0.0);
    for (int x = 1; x <= m; ++x) table[x] = table[x - 1] + steps[x - 1];
    instance.valuations.emplace_back(std::move(table));
  }
  return instance;
}

GameInstance gen_poa2_worstcase(int m) {
  if (m < 2) throw std::domain_error("gen_poa2_worstcase: m >= 2");
  std::vector<double> v1(static_cast<size_t>(m) + 1, static_cast<double>(m));
  v1[0] = 0.0;
  std::vector<double> v2(static_cast<size_t>(m) + 1);
  for (int x = 0; x <= m; ++x) v2[x] = static_cast<double>(x);
  return GameInstance{m, {Valuation{std::move(v1)}, Valuation{std::move(v2)}}};
}

GameInstance gen_unbounded_worstcase(int n, double eps) {
  if (n < 1) throw std::domain_error("gen_unbounded_worstcase: n >= 1");
  if (!(eps > 0)) throw std::domain_error("gen_unbounded_worstcase: eps > 0");
  GameInstance instance;
  instance.m = n;
  std::vector<double> table(static_cast<size_t>(n) + 1, 0.0);
  for (int x = 1; x <= n; ++x) table[x] = 1.0 + x * eps;
  instance.valuations.assign(static_cast<size_t>(n), Valuation{table});
  return instance;
}

}  // namespace funding

#pragma once

#include <span>
#include <vector>

#include "funding/multiround.hpp"

namespace funding {

// Default cap for the unbounded coordinate in supremum searches; the
// supremum is a limit, so achievable gaps scale with this cap.
inline constexpr double kDefaultXMax = 1e6;

// F(x) = [sum_i i (1 - 1/x_i)] / [sum_i i prod_{j>i} x_j], x_i >= 1.
// Its supremum over x is 1/k, approached as x_1 -> infinity with
// x_i = i/(i-1).
double eval_F(std::span<const double> x);

// G(x, y) = [sum_i y_i (1 - 1/x_i)] / [sum_i y_i prod_{j>i} x_j];
// G(x, (1..k)) = F(x).
double eval_G(std::span<const double> x, std::span<const double> y);

// Transformed objective C(z) with z_k = 1 and the x_1 -> infinity limit
// taken (the z_1/z_0 term vanishes); nonnegative everywhere with a unique
// zero at z_i = k/i. Independent cross-check of the F-domain search.
// z holds z_1..z_{k-1}.
double eval_C(std::span<const double> z);

struct SupSearchResult {
  std::vector<double> best_x;
  double best_value = 0.0;
};

// Multi-start coordinate ascent for sup F over [1, x_max]^k, seeded with
// the analytic near-optimum (x_1 = x_max, x_i = i/(i-1)).
SupSearchResult sup_search_F(int k, int budget, double x_max = kDefaultXMax);

// Same search for G with fixed bundle-ratio weights y.
SupSearchResult sup_search_G(std::span<const double> y, int budget,
                             double x_max = kDefaultXMax);

// Instantiates the multi-round bound 1 + G(x, y) with x_t = Delta^t /
// Delta^{t+1} and y_t = m^t / m^1 taken from a trace. Returns 1.0 when
// Delta^{k+1} = 0 (the slack term vanishes and the bound is vacuous).
double eval_theorem2_bound(const RoundTrace& trace);

}  // namespace funding

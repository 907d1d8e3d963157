#include "funding/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace funding {

namespace {

double ratio_objective(std::span<const double> x, std::span<const double> y) {
  const size_t k = x.size();
  double numerator = 0.0;
  double denominator = 0.0;
  double suffix = 1.0;  // prod_{j>i} x_j, built from the back
  for (size_t i = k; i-- > 0;) {
    numerator += y[i] * (1.0 - 1.0 / x[i]);
    denominator += y[i] * suffix;
    suffix *= x[i];
  }
  return numerator / denominator;
}

}  // namespace

double eval_F(std::span<const double> x) {
  if (x.empty()) throw std::domain_error("eval_F: empty x");
  std::vector<double> y(x.size());
  for (size_t i = 0; i < y.size(); ++i) y[i] = static_cast<double>(i + 1);
  return ratio_objective(x, y);
}

double eval_G(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || x.size() != y.size())
    throw std::domain_error("eval_G: x and y must be nonempty and equal-sized");
  if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; }))
    throw std::domain_error("eval_G: y must not be all zero");
  return ratio_objective(x, y);
}

double eval_C(std::span<const double> z) {
  const size_t k = z.size() + 1;
  double total = 0.0;
  for (size_t i = 1; i <= k; ++i) {
    const double zi = (i == k) ? 1.0 : z[i - 1];
    total += static_cast<double>(i) * zi;
    if (i > 1) total += static_cast<double>(i) * k * zi / z[i - 2];
    // the i = 1 ratio term z_1/z_0 vanishes in the x_1 -> infinity limit
    total -= static_cast<double>(i) * k;
  }
  return total;
}

namespace {

// Golden-section maximization of a unimodal section over [lo, hi].
template <typename Fn>
double golden_max(Fn&& f, double lo, double hi, int iters, int& evals) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  evals += 2;
  for (int it = 0; it < iters && (b - a) > 1e-12 * (1.0 + std::abs(a)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  return fc > fd ? c : d;
}

SupSearchResult coordinate_ascent(std::span<const double> y, std::vector<double> x,
                                  double x_max, int budget, int& evals) {
  SupSearchResult result;
  result.best_x = x;
  result.best_value = ratio_objective(x, y);
  ++evals;
  const int k = static_cast<int>(x.size());
  bool improved = true;
  while (improved && evals < budget) {
    improved = false;
    for (int i = 0; i < k && evals < budget; ++i) {
      auto section = [&](double xi) {
        x[i] = xi;
        return ratio_objective(x, y);
      };
      x[i] = golden_max(section, 1.0, x_max, 90, evals);
      const double value = ratio_objective(x, y);
      ++evals;
      if (value > result.best_value + 1e-15) {
        result.best_value = value;
        result.best_x = x;
        improved = true;
      }
    }
  }
  return result;
}

}  // namespace

SupSearchResult sup_search_G(std::span<const double> y, int budget, double x_max) {
  const int k = static_cast<int>(y.size());
  if (k < 1 || budget < 1) throw std::domain_error("sup_search_G: k, budget >= 1");

  std::vector<std::vector<double>> seeds;
  // analytic near-optimum for ratio-t weights: unbounded first coordinate,
  // x_i = i/(i-1) after it
  std::vector<double> analytic(static_cast<size_t>(k), 1.0);
  analytic[0] = x_max;
  for (int i = 2; i <= k; ++i) analytic[i - 1] = static_cast<double>(i) / (i - 1);
  seeds.push_back(analytic);
  seeds.emplace_back(static_cast<size_t>(k), 2.0);
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> expo(0.0, std::log(x_max));
  for (int s = 0; s < 4; ++s) {
    std::vector<double> pt(static_cast<size_t>(k));
    for (auto& v : pt) v = std::exp(expo(rng));
    seeds.push_back(std::move(pt));
  }

  SupSearchResult best;
  best.best_value = -1.0;
  int evals = 0;
  for (auto& seed : seeds) {
    SupSearchResult r = coordinate_ascent(y, std::move(seed), x_max, budget, evals);
    if (r.best_value > best.best_value) best = std::move(r);
    if (evals >= budget) break;
  }
  return best;
}

SupSearchResult sup_search_F(int k, int budget, double x_max) {
  if (k < 1) throw std::domain_error("sup_search_F: k >= 1");
  std::vector<double> y(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) y[i] = static_cast<double>(i + 1);
  return sup_search_G(y, budget, x_max);
}

double eval_theorem2_bound(const RoundTrace& trace) {
  if (!(trace.final_delta > 0.0)) return 1.0;
  const size_t k = trace.rounds.size();
  std::vector<double> x(k), y(k);
  for (size_t t = 0; t < k; ++t) {
    const double next = (t + 1 < k) ? trace.rounds[t + 1].delta : trace.final_delta;
    x[t] = trace.rounds[t].delta / next;
    y[t] = static_cast<double>(trace.bundle_sizes[t]) / trace.bundle_sizes[0];
  }
  return 1.0 + eval_G(x, y);
}

}  // namespace funding

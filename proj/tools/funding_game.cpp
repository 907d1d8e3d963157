// Command-line front end: instance generation, equilibrium computation,
// multi-round simulation sweeps and bound verification.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "funding/analysis.hpp"
#include "funding/equilibrium.hpp"
#include "funding/json_io.hpp"
#include "funding/mechanism.hpp"
#include "funding/multiround.hpp"
#include "funding/valuation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

// shortest round-trip decimal
std::string fmt(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

// 9 significant digits, so near-bound violations stay visible
std::string fmt9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

double x_max_from_env() {
  if (const char* s = std::getenv("FUNDING_GAME_XMAX")) return std::atof(s);
  return funding::kDefaultXMax;
}

struct InstanceSource {
  std::string in_path;
  std::string family;
  int m = 10;
  int n = 2;
  std::uint64_t seed = 0;
  double eps = 0.01;
  double max_increment = 10.0;
  bool seed_set = false;

  void attach(CLI::App* cmd, bool file_allowed) {
    if (file_allowed) cmd->add_option("--in", in_path, "instance JSON file");
    cmd->add_option("--family", family, "generator: random-concave | poa2 | unbounded");
    cmd->add_option("--m", m, "item count");
    cmd->add_option("--n", n, "player count");
    cmd->add_option("--seed", seed, "generator seed")->each([this](const std::string&) {
      seed_set = true;
    });
    cmd->add_option("--eps", eps, "epsilon for the unbounded family");
    cmd->add_option("--max-increment", max_increment, "increment cap for random-concave");
  }

  funding::GameInstance resolve() const {
    if (!in_path.empty()) return funding::load_instance(in_path);
    if (family == "random-concave") {
      if (!seed_set) throw std::invalid_argument("random-concave requires --seed");
      return funding::gen_random_concave(m, n, seed, max_increment);
    }
    if (family == "poa2") return funding::gen_poa2_worstcase(m);
    if (family == "unbounded") return funding::gen_unbounded_worstcase(n, eps);
    throw std::invalid_argument("unknown generator family: '" + family + "'");
  }
};

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write output file: " + path);
  return file;
}

int run_gen(const InstanceSource& source, const std::string& out_path) {
  const funding::GameInstance instance = source.resolve();
  const auto report = funding::validate(instance);
  funding::save_instance(instance, out_path);
  if (!report) {
    std::cerr << "validation FAILED at index " << report.index << ": " << report.reason << "\n";
    return kExitValidation;
  }
  std::cerr << "wrote " << out_path << " (n=" << instance.num_players()
            << ", m=" << instance.m << "), validation ok\n";
  return kExitOk;
}

int run_nash(const InstanceSource& source, const std::string& out_path) {
  const funding::GameInstance instance = source.resolve();
  if (auto report = funding::validate(instance); !report) {
    std::cerr << "invalid instance at index " << report.index << ": " << report.reason << "\n";
    return kExitValidation;
  }
  const auto eq = funding::compute_nash(instance);
  const double welfare = funding::social_welfare(instance, eq.allocation);
  const double opt = funding::dp_optimal_value(instance);
  const bool verdict = funding::verify_nash(instance, eq.profile);

  nlohmann::json j;
  auto& players = j["players"] = nlohmann::json::array();
  for (int i = 0; i < instance.num_players(); ++i)
    players.push_back({{"alpha", eq.certified[i]},
                       {"value", eq.profile[i].declared_value},
                       {"allocated", eq.allocation[i]}});
  j["welfare"] = welfare;
  j["opt"] = opt;
  j["ratio"] = welfare > 0 ? opt / welfare : 0.0;
  j["degenerate"] = eq.degenerate;
  j["nash_verified"] = verdict;
  std::ofstream file;
  open_output(file, out_path) << j.dump(2) << "\n";
  return verdict ? kExitOk : kExitViolation;
}

int run_simulate(const InstanceSource& source, int k, const std::string& sizing,
                 const std::string& out_path) {
  const funding::GameInstance instance = source.resolve();
  if (auto report = funding::validate(instance); !report) {
    std::cerr << "invalid instance at index " << report.index << ": " << report.reason << "\n";
    return kExitValidation;
  }
  const auto mode =
      sizing == "rounded" ? funding::SizingMode::kRounded : funding::SizingMode::kStrict;
  const auto config = funding::bundle_sizes_ratio_t(instance.m, k, mode);
  const auto trace = funding::run_multiround(instance, config);

  nlohmann::json j = funding::trace_to_json(trace);
  j["welfare"] = funding::trace_welfare(instance, trace);
  j["opt"] = funding::dp_optimal_value(instance);
  j["poa_ratio"] = funding::poa_ratio(instance, trace);
  j["theorem2_bound"] = funding::eval_theorem2_bound(trace);
  j["lemma2_ok"] = funding::check_lemma_descdelta(trace);
  j["lemma3_ok"] = funding::check_lemma_bound(instance, trace);
  std::ofstream file;
  open_output(file, out_path) << j.dump(2) << "\n";

  const bool ok = j["lemma2_ok"].get<bool>() && j["lemma3_ok"].get<bool>() &&
                  funding::poa_ratio(instance, trace) <=
                      funding::eval_theorem2_bound(trace) + 1e-9;
  return ok ? kExitOk : kExitViolation;
}

int run_sweep(const std::vector<int>& ks, int instances, std::uint64_t base_seed, int m,
              int n, double max_increment, const std::string& sizing,
              const std::string& out_path) {
  const auto mode =
      sizing == "rounded" ? funding::SizingMode::kRounded : funding::SizingMode::kStrict;
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "seed,n,m,k,sw_opt,sw_ne,ratio,theorem2_bound,lemma2_ok,lemma3_ok,note\n";
  int violations = 0;
  for (int k : ks) {
    double max_ratio = 0.0;
    for (int idx = 0; idx < instances; ++idx) {
      const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(idx);
      funding::MultiRoundConfig config;
      try {
        config = funding::bundle_sizes_ratio_t(m, k, mode);
      } catch (const std::domain_error& e) {
        out << seed << ',' << n << ',' << m << ',' << k << ",,,,,,,skipped: " << e.what()
            << "\n";
        continue;
      }
      const auto instance = funding::gen_random_concave(m, n, seed, max_increment);
      const auto trace = funding::run_multiround(instance, config);
      const double sw_opt = funding::dp_optimal_value(instance);
      const double sw_ne = funding::trace_welfare(instance, trace);
      const double ratio = funding::poa_ratio(instance, trace);
      const double bound = funding::eval_theorem2_bound(trace);
      const bool l2 = funding::check_lemma_descdelta(trace);
      const bool l3 = funding::check_lemma_bound(instance, trace);
      max_ratio = std::max(max_ratio, ratio);
      out << seed << ',' << n << ',' << m << ',' << k << ',' << fmt(sw_opt) << ','
          << fmt(sw_ne) << ',' << fmt9(ratio) << ',' << fmt9(bound) << ',' << (l2 ? 1 : 0)
          << ',' << (l3 ? 1 : 0) << ",\n";
      if (ratio > 1.0 + 1.0 / k + 1e-9 || !l2 || !l3) {
        ++violations;
        const std::string dump = "poa_violation_seed" + std::to_string(seed) + "_k" +
                                 std::to_string(k) + ".json";
        funding::save_instance(instance, dump);
        std::cerr << "inequality violation at seed=" << seed << " k=" << k
                  << " ratio=" << fmt9(ratio) << ", instance dumped to " << dump << "\n";
      }
    }
    out << "max,,," << k << ",,," << fmt9(max_ratio) << ",,,,summary\n";
  }
  return violations == 0 ? kExitOk : kExitViolation;
}

int run_bounds(const std::vector<int>& ks, int budget, const std::string& out_path) {
  const double x_max = x_max_from_env();
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  int violations = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (int k : ks) {
    const auto result = funding::sup_search_F(k, budget, x_max);
    const double target = 1.0 / k;
    std::vector<double> z(static_cast<size_t>(k) - 1);
    for (int i = 1; i < k; ++i) z[i - 1] = static_cast<double>(k) / i;
    const double residual = std::abs(funding::eval_C(z));
    rows.push_back({{"k", k},
                    {"best_value", result.best_value},
                    {"best_x", result.best_x},
                    {"gap_to_1_over_k", target - result.best_value},
                    {"stationary_residual", residual}});
    if (result.best_value > target + 1e-6 || residual > 1e-9) ++violations;
  }
  out << rows.dump(2) << "\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Funding Game simulator: greedy allocation mechanisms, Nash "
               "equilibria and multi-round price-of-anarchy experiments"};
  app.require_subcommand(1);

  InstanceSource source;
  std::string out_path;
  std::string sizing = "strict";
  int k = 1;
  std::vector<int> ks{1, 2, 3, 4, 5};
  int instances = 100;
  int budget = 20000;

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  source.attach(gen, /*file_allowed=*/false);
  gen->add_option("-o,--out", out_path, "output instance JSON")->required();

  auto* nash = app.add_subcommand("nash", "compute and verify a Nash equilibrium");
  source.attach(nash, /*file_allowed=*/true);
  nash->add_option("-o,--out", out_path, "report path (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "run the k-round game on one instance");
  source.attach(simulate, /*file_allowed=*/true);
  simulate->add_option("--k", k, "round count")->required();
  simulate->add_option("--sizing", sizing, "strict | rounded")
      ->check(CLI::IsMember({"strict", "rounded"}));
  simulate->add_option("-o,--out", out_path, "trace path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "multi-round PoA sweep over random instances");
  sweep->add_option("--k", ks, "round counts");
  sweep->add_option("--instances", instances, "instances per k");
  sweep->add_option("--seed", source.seed, "base seed")->required();
  sweep->add_option("--m", source.m, "item count");
  sweep->add_option("--n", source.n, "player count");
  sweep->add_option("--max-increment", source.max_increment, "increment cap");
  sweep->add_option("--sizing", sizing, "strict | rounded")
      ->check(CLI::IsMember({"strict", "rounded"}));
  sweep->add_option("-o,--out", out_path, "CSV path (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "verify the closed-form bound expressions");
  bounds->add_option("--k", ks, "round counts");
  bounds->add_option("--budget", budget, "search evaluation budget per k");
  bounds->add_option("-o,--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(source, out_path);
    if (nash->parsed()) return run_nash(source, out_path);
    if (simulate->parsed()) return run_simulate(source, k, sizing, out_path);
    if (sweep->parsed())
      return run_sweep(ks, instances, source.seed, source.m, source.n,
                       source.max_increment, sizing, out_path);
    if (bounds->parsed()) return run_bounds(ks, budget, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

#include "funding/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace funding {

using nlohmann::json;

json instance_to_json(const GameInstance& instance) {
  json j;
  j["m"] = instance.m;
  auto& vals = j["valuations"] = json::array();
  for (const auto& v : instance.valuations) vals.push_back(v.values);
  return j;
}

GameInstance instance_from_json(const json& j) {
  GameInstance instance;
  instance.m = j.at("m").get<int>();
  for (const auto& table : j.at("valuations")) {
    instance.valuations.emplace_back(table.get<std::vector<double>>());
    if (instance.valuations.back().max_items() != instance.m)
      throw std::invalid_argument("instance JSON: valuation length must be m+1");
  }
  return instance;
}

GameInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read instance file: " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

void save_instance(const GameInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(instance).dump(2) << '\n';
}

json trace_to_json(const RoundTrace& trace) {
  json j;
  j["bundle_sizes"] = trace.bundle_sizes;
  j["final_delta"] = trace.final_delta;
  auto& rounds = j["rounds"] = json::array();
  for (const auto& r : trace.rounds) {
    json round;
    auto& requests = round["requests"] = json::array();
    for (const auto& req : r.requests)
      requests.push_back({{"quantity", req.quantity}, {"value", req.declared_value}});
    round["allocation"] = r.allocation;
    round["cumulative"] = r.cumulative;
    round["welfare"] = r.welfare;
    round["delta"] = r.delta;
    rounds.push_back(std::move(round));
  }
  return j;
}

}  // namespace funding

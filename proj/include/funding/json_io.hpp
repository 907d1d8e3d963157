#pragma once

#include <string>

#include <json.hpp>

#include "funding/multiround.hpp"
#include "funding/valuation.hpp"

namespace funding {

// Instance schema: {"m": int, "valuations": [[real,...], ...]},
// each inner array of length m+1.
nlohmann::json instance_to_json(const GameInstance& instance);
GameInstance instance_from_json(const nlohmann::json& j);

GameInstance load_instance(const std::string& path);
void save_instance(const GameInstance& instance, const std::string& path);

// Trace schema: per-round requests, allocations, delta values and welfare.
nlohmann::json trace_to_json(const RoundTrace& trace);

}  // namespace funding

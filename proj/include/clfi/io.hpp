#pragma once

#include <string>

#include "json.hpp"

#include "clfi/gameform.hpp"
#include "clfi/model.hpp"

namespace clfi {

using Json = nlohmann::ordered_json;

/// Model file:
///   {"states": n, "agents": k, "valuation": {"p": [0, 2]},
///    "effectivity": [{"state": 0, "coalition": [1], "minimal": [[1], [0, 2]]}, ...]}
/// An entry may give "explicit" (the full family, validated upward closed)
/// instead of "minimal". Every (state, coalition) pair must appear exactly once.
CoalitionModel model_from_json(const Json& j);
Json model_to_json(const CoalitionModel& m);

/// Game-form file:
///   {"states": n, "agents": k, "forms": [{"state": 0, "actions": [2, 2], "outcomes": [0, 1, 1, 0]}],
///    "valuation": {...}}
/// A form without "state" applies to every state not listed explicitly.
/// "valuation" is optional and carried into induced models.
struct GameFormFile {
    GameForm form;
    std::map<std::string, StateSet> valuation;
};

GameFormFile game_form_from_json(const Json& j);
Json game_form_to_json(const GameForm& g, const std::map<std::string, StateSet>& valuation = {});

Json state_set_to_json(StateSet s);
Json agent_set_to_json(AgentSet s);

/// Read and parse a JSON file; throws ModelError with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace clfi

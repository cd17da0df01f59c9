#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "litiquant/scenario.hpp"

namespace litiquant {

using ordered_json = nlohmann::ordered_json;

// A scenario document is one flat JSON object holding exactly the
// DisputeScenario field names; "currency" is optional and defaults to "USD".
// Unknown or missing fields are rejected.
//
// Throws ParseError for malformed JSON (with line/column) and ValidationError
// for schema or range violations.
DisputeScenario load_scenario(std::istream& in);
DisputeScenario load_scenario(std::string_view text);
DisputeScenario load_scenario_file(const std::filesystem::path& path);

// Same checks on an already-parsed value, e.g. a scenario nested in a request.
DisputeScenario scenario_from_json(const nlohmann::json& j);

ordered_json scenario_to_json(const DisputeScenario& s);
std::string serialize_scenario(const DisputeScenario& s);

// Parses text as JSON, translating parser errors into ParseError.
nlohmann::json parse_json(std::string_view text);

}  // namespace litiquant

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "litiquant/scenario_store.hpp"

namespace litiquant::api {

struct Response {
  int status = 200;
  std::string body;
  std::string etag;  // set on scenario store reads and writes
};

// Endpoint handlers, independent of the transport. Status mapping:
// 400 malformed JSON, 422 validation failure, 404 unknown scenario name,
// 409 failed If-Match precondition. Degenerate economics are 200 with
// warnings.
Response analyze(std::string_view body);
Response sweep(std::string_view body);
Response simulate(std::string_view body);
Response optimal_cost(std::string_view body);
Response classify_offer(std::string_view body);
Response health();

Response get_scenario(const ScenarioStore& store, const std::string& name);
Response put_scenario(ScenarioStore& store, const std::string& name,
                      std::string_view body,
                      const std::optional<std::string>& if_match);
Response delete_scenario(ScenarioStore& store, const std::string& name,
                         const std::optional<std::string>& if_match);
Response list_scenarios(const ScenarioStore& store);

}  // namespace litiquant::api

#include "litiquant/api.hpp"

#include <charconv>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "litiquant/errors.hpp"
#include "litiquant/report.hpp"
#include "litiquant/scenario_io.hpp"
#include "litiquant/sweep.hpp"

namespace litiquant::api {
namespace {

using nlohmann::json;

Response json_response(int status, const ordered_json& j) {
  return {status, j.dump(2) + "\n", {}};
}

Response error_response(int status, const std::string& kind, const std::string& message,
                        ordered_json extra = ordered_json::object()) {
  ordered_json err = ordered_json::object();
  err["kind"] = kind;
  err["message"] = message;
  for (auto& [k, v] : extra.items()) err[k] = v;
  ordered_json j = ordered_json::object();
  j["error"] = std::move(err);
  return json_response(status, j);
}

template <typename Fn>
Response guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    ordered_json extra = ordered_json::object();
    extra["line"] = e.line();
    extra["column"] = e.column();
    return error_response(400, "parse", e.what(), std::move(extra));
  } catch (const ValidationError& e) {
    ordered_json extra = ordered_json::object();
    extra["field"] = e.field();
    extra["constraint"] = e.constraint();
    return error_response(422, "validation", e.what(), std::move(extra));
  } catch (const InvalidSweep& e) {
    return error_response(422, "invalid_sweep", e.what());
  } catch (const StoreConflict& e) {
    return error_response(409, "conflict", e.what());
  } catch (const Error& e) {
    return error_response(422, "domain", e.what());
  }
}

json parse_request(std::string_view body, std::initializer_list<const char*> allowed) {
  json j = parse_json(body);
  if (!j.is_object()) throw ValidationError("body", "must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ValidationError(key, "unknown field");
  }
  return j;
}

DisputeScenario scenario_field(const json& j) {
  const auto it = j.find("scenario");
  if (it == j.end()) throw ValidationError("scenario", "required field is missing");
  return scenario_from_json(*it);
}

double number_field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw ValidationError(name, "required field is missing");
  if (!it->is_number()) throw ValidationError(name, "must be a number");
  return it->get<double>();
}

std::optional<double> optional_number(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw ValidationError(name, "must be a number");
  return it->get<double>();
}

// Accepts JSON unsigned integers or decimal strings (for 64-bit seeds that
// do not survive a trip through a JavaScript number).
std::optional<std::uint64_t> optional_unsigned(const json& j, const char* name,
                                               std::uint64_t max) {
  const auto it = j.find(name);
  if (it == j.end() || it->is_null()) return std::nullopt;
  std::uint64_t v = 0;
  if (it->is_number_unsigned()) {
    v = it->get<std::uint64_t>();
  } else if (it->is_number_integer() && it->get<std::int64_t>() >= 0) {
    v = static_cast<std::uint64_t>(it->get<std::int64_t>());
  } else if (it->is_string()) {
    const auto& s = it->get_ref<const std::string&>();
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ValidationError(name, "must be a nonnegative integer");
    }
  } else {
    throw ValidationError(name, "must be a nonnegative integer");
  }
  if (v > max) throw ValidationError(name, "must be <= " + std::to_string(max));
  return v;
}

}  // namespace

Response analyze(std::string_view body) {
  return guarded([&] {
    const DisputeScenario s = load_scenario(body);
    return Response{200, to_canonical_json(litiquant::analyze(s)), {}};
  });
}

Response sweep(std::string_view body) {
  return guarded([&] {
    const json j = parse_request(body, {"scenario", "param", "from", "to", "steps"});
    const DisputeScenario s = scenario_field(j);
    const auto param = j.find("param");
    if (param == j.end() || !param->is_string()) {
      throw ValidationError("param", "must be a string");
    }
    const double lo = number_field(j, "from");
    const double hi = number_field(j, "to");
    const auto steps = optional_unsigned(j, "steps", kMaxSweepSteps);
    if (!steps) throw ValidationError("steps", "required field is missing");
    const SweepSeries series =
        litiquant::sweep(s, param->get<std::string>(), lo, hi, *steps);
    return json_response(200, sweep_to_json(series));
  });
}

Response simulate(std::string_view body) {
  return guarded([&] {
    const json j = parse_request(
        body, {"scenario", "trials", "seed", "max_rounds", "terminal", "workers"});
    const DisputeScenario s = scenario_field(j);
    SimulationOptions opts;
    opts.trials = optional_unsigned(j, "trials", std::uint64_t{1} << 32);
    opts.seed = optional_unsigned(j, "seed", std::numeric_limits<std::uint64_t>::max());
    if (auto r = optional_unsigned(j, "max_rounds", std::numeric_limits<std::uint32_t>::max())) {
      opts.max_rounds = static_cast<std::uint32_t>(*r);
    }
    if (auto w = optional_unsigned(j, "workers", 256)) opts.workers = static_cast<unsigned>(*w);
    if (const auto t = j.find("terminal"); t != j.end()) {
      if (!t->is_string()) throw ValidationError("terminal", "must be a string");
      opts.terminal_rule = parse_terminal_rule(t->get<std::string>());
    }
    return json_response(200, simulation_to_json(run_simulation(s, opts)));
  });
}

Response optimal_cost(std::string_view body) {
  return guarded([&] {
    const json j = parse_request(body, {"scenario", "k", "tol"});
    const DisputeScenario s = scenario_field(j);
    const auto report = optimal_cost_report(s, optional_number(j, "k"), optional_number(j, "tol"));
    return json_response(200, optimal_cost_to_json(report));
  });
}

Response classify_offer(std::string_view body) {
  return guarded([&] {
    const json j = parse_request(body, {"scenario", "offer"});
    const DisputeScenario s = scenario_field(j);
    const double offer = number_field(j, "offer");
    if (!std::isfinite(offer)) throw ValidationError("offer", "must be finite");
    const FairBargainQuote quote = fair_bargain(s);
    ordered_json out = ordered_json::object();
    out["offer"] = offer;
    out["reasonable_bargain"] = quote.rb;
    if (quote.priced()) {
      out["fair_bargain"] = *quote.fair_bargain;
      out["classification"] = to_string(litiquant::classify_offer(offer, quote));
      out["warnings"] = ordered_json::array();
    } else {
      out["fair_bargain"] = nullptr;
      out["classification"] = nullptr;
      out["warnings"] = {std::string("unpriceable: ") + to_string(*quote.unpriceable)};
    }
    return json_response(200, out);
  });
}

Response health() {
  ordered_json j = ordered_json::object();
  j["status"] = "ok";
  return json_response(200, j);
}

Response get_scenario(const ScenarioStore& store, const std::string& name) {
  return guarded([&] {
    const auto stored = store.get(name);
    if (!stored) return error_response(404, "not_found", "no scenario named '" + name + "'");
    return Response{200, serialize_scenario(stored->scenario), stored->etag};
  });
}

Response put_scenario(ScenarioStore& store, const std::string& name,
                      std::string_view body, const std::optional<std::string>& if_match) {
  return guarded([&] {
    ScenarioStore::validate_name(name);
    const DisputeScenario s = load_scenario(body);
    const std::string etag = store.put(name, s, if_match);
    return Response{200, serialize_scenario(s), etag};
  });
}

Response delete_scenario(ScenarioStore& store, const std::string& name,
                         const std::optional<std::string>& if_match) {
  return guarded([&] {
    if (!store.remove(name, if_match)) {
      return error_response(404, "not_found", "no scenario named '" + name + "'");
    }
    ordered_json j = ordered_json::object();
    j["deleted"] = name;
    return json_response(200, j);
  });
}

Response list_scenarios(const ScenarioStore& store) {
  return guarded([&] {
    ordered_json j = ordered_json::object();
    j["scenarios"] = store.list();
    return json_response(200, j);
  });
}

}  // namespace litiquant::api

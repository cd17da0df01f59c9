#include "litiquant/scenario_io.hpp"

#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

#include "litiquant/errors.hpp"

namespace litiquant {
namespace {

struct NumericField {
  const char* name;
  double DisputeScenario::*member;
};

constexpr std::array<NumericField, 11> kNumericFields{{
    {"winning_benefit", &DisputeScenario::winning_benefit},
    {"settlement_benefit", &DisputeScenario::settlement_benefit},
    {"admin_cost", &DisputeScenario::admin_cost},
    {"bargain_cost", &DisputeScenario::bargain_cost},
    {"p_win", &DisputeScenario::p_win},
    {"q_settle", &DisputeScenario::q_settle},
    {"p_appeal_win", &DisputeScenario::p_appeal_win},
    {"filing_cost", &DisputeScenario::filing_cost},
    {"inflation_rate", &DisputeScenario::inflation_rate},
    {"horizon_years", &DisputeScenario::horizon_years},
    {"volatility", &DisputeScenario::volatility},
}};

void line_and_column(std::string_view text, std::size_t byte, std::size_t& line,
                     std::size_t& column) {
  line = 1;
  column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 0;
    std::size_t column = 0;
    line_and_column(text, e.byte, line, column);
    throw ParseError("malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + e.what(),
                     line, column);
  }
}

DisputeScenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("scenario", "must be a JSON object");

  for (const auto& [key, value] : j.items()) {
    if (key == "currency") continue;
    bool known = false;
    for (const auto& f : kNumericFields) known = known || key == f.name;
    if (!known) throw ValidationError(key, "unknown field");
  }

  DisputeScenario s;
  for (const auto& f : kNumericFields) {
    const auto it = j.find(f.name);
    if (it == j.end()) throw ValidationError(f.name, "required field is missing");
    if (!it->is_number()) throw ValidationError(f.name, "must be a number");
    s.*f.member = it->get<double>();
  }
  if (const auto it = j.find("currency"); it != j.end()) {
    if (!it->is_string()) throw ValidationError("currency", "must be a string");
    s.currency = it->get<std::string>();
  }
  validate(s);
  return s;
}

DisputeScenario load_scenario(std::string_view text) {
  return scenario_from_json(parse_json(text));
}

DisputeScenario load_scenario(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  return load_scenario(std::string_view(text));
}

DisputeScenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file " + path.string(), 0, 0);
  return load_scenario(in);
}

ordered_json scenario_to_json(const DisputeScenario& s) {
  ordered_json j = ordered_json::object();
  for (const auto& f : kNumericFields) j[f.name] = s.*f.member;
  j["currency"] = s.currency;
  return j;
}

std::string serialize_scenario(const DisputeScenario& s) {
  return scenario_to_json(s).dump(2) + "\n";
}

}  // namespace litiquant

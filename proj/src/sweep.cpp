#include "litiquant/sweep.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "litiquant/errors.hpp"

namespace litiquant {
namespace {

struct Param {
  const char* name;
  double DisputeScenario::*member;
};

constexpr std::array<Param, 9> kParams{{
    {"p_win", &DisputeScenario::p_win},
    {"q_settle", &DisputeScenario::q_settle},
    {"winning_benefit", &DisputeScenario::winning_benefit},
    {"settlement_benefit", &DisputeScenario::settlement_benefit},
    {"admin_cost", &DisputeScenario::admin_cost},
    {"bargain_cost", &DisputeScenario::bargain_cost},
    {"volatility", &DisputeScenario::volatility},
    {"horizon_years", &DisputeScenario::horizon_years},
    {"inflation_rate", &DisputeScenario::inflation_rate},
}};

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& sweepable_params() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : kParams) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

SweepSeries sweep(const DisputeScenario& s, std::string_view param, double lo,
                  double hi, std::size_t steps) {
  const Param* target = nullptr;
  for (const auto& p : kParams) {
    if (param == p.name) target = &p;
  }
  if (target == nullptr) {
    throw InvalidSweep("unknown sweep parameter '" + std::string(param) + "'");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InvalidSweep("sweep range must satisfy lo < hi");
  }
  if (steps < 2 || steps > kMaxSweepSteps) {
    throw InvalidSweep("steps must be in [2, " + std::to_string(kMaxSweepSteps) + "]");
  }

  SweepSeries series;
  series.swept_param = target->name;
  series.grid.reserve(steps);
  series.rows.reserve(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) {
    const double value =
        k + 1 == steps ? hi : lo + (hi - lo) * (static_cast<double>(k) / last);
    DisputeScenario point = s;
    point.*target->member = value;
    AnalysisReport r;
    try {
      r = analyze(point);
    } catch (const ValidationError& e) {
      throw InvalidSweep("grid point " + csv_number(value) +
                         " leaves the valid domain (" + e.what() + ")");
    }
    SweepRow row;
    row.value = value;
    row.evc = r.bargain.evc;
    row.threat_value = r.bargain.threat_value;
    row.noncoop_bargain = r.bargain.noncoop_bargain;
    row.coop_bargain = r.bargain.coop_bargain;
    row.reasonable_bargain = r.bargain.reasonable_bargain;
    row.evp = r.evp;
    row.claim_value = r.quote.claim_value;
    row.fair_bargain = r.quote.fair_bargain;
    series.grid.push_back(value);
    series.rows.push_back(row);
  }
  return series;
}

std::string sweep_to_csv(const SweepSeries& series) {
  std::ostringstream out;
  out << series.swept_param
      << ",evc,threat_value,noncoop_bargain,coop_bargain,reasonable_bargain,evp,"
         "claim_value,fair_bargain\n";
  for (const auto& r : series.rows) {
    out << csv_number(r.value) << ',' << csv_number(r.evc) << ','
        << csv_number(r.threat_value) << ',' << csv_number(r.noncoop_bargain)
        << ',' << csv_number(r.coop_bargain) << ','
        << csv_number(r.reasonable_bargain) << ',' << csv_number(r.evp) << ','
        << (r.claim_value ? csv_number(*r.claim_value) : "") << ','
        << (r.fair_bargain ? csv_number(*r.fair_bargain) : "") << '\n';
  }
  return out.str();
}

ordered_json sweep_to_json(const SweepSeries& series) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : series.rows) {
    ordered_json j = ordered_json::object();
    j["value"] = r.value;
    j["evc"] = r.evc;
    j["threat_value"] = r.threat_value;
    j["noncoop_bargain"] = r.noncoop_bargain;
    j["coop_bargain"] = r.coop_bargain;
    j["reasonable_bargain"] = r.reasonable_bargain;
    j["evp"] = r.evp;
    j["claim_value"] = r.claim_value ? ordered_json(*r.claim_value) : ordered_json(nullptr);
    j["fair_bargain"] = r.fair_bargain ? ordered_json(*r.fair_bargain) : ordered_json(nullptr);
    rows.push_back(std::move(j));
  }
  ordered_json j = ordered_json::object();
  j["swept_param"] = series.swept_param;
  j["grid"] = series.grid;
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace litiquant

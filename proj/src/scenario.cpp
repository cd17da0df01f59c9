#include "litiquant/scenario.hpp"

#include <cmath>
#include <string>

#include "litiquant/errors.hpp"

namespace litiquant {
namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) throw ValidationError(field, "must be a finite number");
}

void require_nonnegative(double v, const char* field) {
  require_finite(v, field);
  if (v < 0.0) throw ValidationError(field, "must be >= 0");
}

void require_probability(double v, const char* field) {
  require_finite(v, field);
  if (v < 0.0 || v > 1.0) throw ValidationError(field, "must be in [0, 1]");
}

}  // namespace

void validate(const DisputeScenario& s) {
  require_nonnegative(s.winning_benefit, "winning_benefit");
  require_nonnegative(s.settlement_benefit, "settlement_benefit");
  require_nonnegative(s.admin_cost, "admin_cost");
  require_nonnegative(s.bargain_cost, "bargain_cost");
  require_probability(s.p_win, "p_win");
  require_probability(s.q_settle, "q_settle");
  require_probability(s.p_appeal_win, "p_appeal_win");
  require_nonnegative(s.filing_cost, "filing_cost");
  require_finite(s.inflation_rate, "inflation_rate");
  require_nonnegative(s.horizon_years, "horizon_years");
  require_nonnegative(s.volatility, "volatility");
  if (s.currency.empty()) throw ValidationError("currency", "must be non-empty");
}

DisputeScenario scale_money(DisputeScenario s, double factor) {
  s.winning_benefit *= factor;
  s.settlement_benefit *= factor;
  s.admin_cost *= factor;
  s.bargain_cost *= factor;
  s.filing_cost *= factor;
  return s;
}

DisputeScenario reference_scenario() {
  DisputeScenario s;
  s.winning_benefit = 10000.0;
  s.settlement_benefit = 5000.0;
  s.admin_cost = 1000.0;
  s.bargain_cost = 500.0;
  s.p_win = 0.6;
  s.q_settle = 0.4;
  s.p_appeal_win = 0.0;
  s.filing_cost = 0.0;
  s.inflation_rate = 0.019;
  s.horizon_years = 0.3333;
  s.volatility = 0.25;
  return s;
}

}  // namespace litiquant

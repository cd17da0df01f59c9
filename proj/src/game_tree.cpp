#include "litiquant/game_tree.hpp"

namespace litiquant {

double expected_value_appeal(const DisputeScenario& s) {
  return s.p_appeal_win * s.winning_benefit - s.admin_cost;
}

double expected_value_trial(const DisputeScenario& s) {
  return s.p_win * s.winning_benefit - s.admin_cost;
}

double expected_value_bargain(const DisputeScenario& s) {
  const double q = s.q_settle;
  return (1.0 - q) * expected_value_trial(s) + q * s.settlement_benefit -
         s.bargain_cost;
}

double expected_value_claim(const DisputeScenario& s) {
  const double p = s.p_win;
  const double q = s.q_settle;
  return s.winning_benefit * (p - 2.0 * p * q + p * q * q) +
         s.admin_cost * (-1.0 + 2.0 * q - q * q) +
         s.settlement_benefit * (2.0 * q - q * q) +
         s.bargain_cost * (-2.0 + q);
}

double expected_value_claim_composed(const DisputeScenario& s) {
  const double q = s.q_settle;
  return (1.0 - q) * expected_value_bargain(s) + q * s.settlement_benefit -
         s.bargain_cost;
}

double threat_value(const DisputeScenario& s) {
  const double q = s.q_settle;
  const double miss = (1.0 - q) * (1.0 - q);
  return s.winning_benefit * s.p_win * miss - s.admin_cost * miss +
         s.settlement_benefit * q * (2.0 - q) - s.bargain_cost * (2.0 - q);
}

double noncoop_bargain(const DisputeScenario& s) {
  return s.p_win * s.winning_benefit - s.admin_cost - 2.0 * s.bargain_cost;
}

double coop_bargain(const DisputeScenario& s) {
  return s.settlement_benefit - s.bargain_cost;
}

double coop_surplus(const DisputeScenario& s) {
  return s.p_win * s.winning_benefit - s.settlement_benefit - s.admin_cost -
         s.bargain_cost;
}

double reasonable_bargain(const DisputeScenario& s) {
  return 0.5 * (s.p_win * s.winning_benefit + s.settlement_benefit) -
         0.5 * (s.admin_cost + 3.0 * s.bargain_cost);
}

FilingViability filing_viability(const DisputeScenario& s) {
  FilingViability v;
  v.threat_value = threat_value(s);
  v.filing_cost = s.filing_cost;
  v.viable = v.threat_value >= v.filing_cost;
  return v;
}

BargainAnalysis analyze_bargain(const DisputeScenario& s) {
  BargainAnalysis a;
  a.eva = expected_value_appeal(s);
  a.evt = expected_value_trial(s);
  a.evb = expected_value_bargain(s);
  a.evc = expected_value_claim(s);
  a.threat_value = a.evc;
  a.noncoop_bargain = noncoop_bargain(s);
  a.coop_bargain = coop_bargain(s);
  a.coop_surplus = coop_surplus(s);
  a.reasonable_bargain = reasonable_bargain(s);
  a.filing_viable = a.threat_value >= s.filing_cost;
  return a;
}

}  // namespace litiquant

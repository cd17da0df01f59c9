#pragma once

#include "litiquant/scenario.hpp"

namespace litiquant {

// Backward induction over the litigation tree: claim -> discovery -> bargain
// -> trial, with a standalone appeal branch. Every function here is pure and
// assumes a validated scenario. Results may be negative.

double expected_value_appeal(const DisputeScenario& s);  // d*W_B - C_a
double expected_value_trial(const DisputeScenario& s);   // p*W_B - C_a
double expected_value_bargain(const DisputeScenario& s);

// Expanded polynomial form in q.
double expected_value_claim(const DisputeScenario& s);

// One-step composition (1-q)*EVB + q*S_B - C_b. Must agree with
// expected_value_claim; kept separate so the two routes can be compared.
double expected_value_claim_composed(const DisputeScenario& s);

// Minimum threat value, in the factored (1-q)^2 form. Equal to EVC.
double threat_value(const DisputeScenario& s);

double noncoop_bargain(const DisputeScenario& s);  // threat value at q = 0
double coop_bargain(const DisputeScenario& s);     // threat value at q = 1
double coop_surplus(const DisputeScenario& s);     // B_N - B_C
double reasonable_bargain(const DisputeScenario& s);

struct FilingViability {
  double threat_value = 0.0;
  double filing_cost = 0.0;
  bool viable = false;  // threat_value >= filing_cost
};

FilingViability filing_viability(const DisputeScenario& s);

struct BargainAnalysis {
  double eva = 0.0;
  double evt = 0.0;
  double evb = 0.0;
  double evc = 0.0;
  double threat_value = 0.0;
  double noncoop_bargain = 0.0;
  double coop_bargain = 0.0;
  double coop_surplus = 0.0;
  double reasonable_bargain = 0.0;
  bool filing_viable = false;
};

BargainAnalysis analyze_bargain(const DisputeScenario& s);

}  // namespace litiquant

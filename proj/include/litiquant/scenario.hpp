#pragma once

#include <string>

namespace litiquant {

// Complete parameter set of one dispute. Money amounts are in major currency
// units of `currency`, which is carried through untouched.
struct DisputeScenario {
  double winning_benefit = 0.0;     // W_B, judgment if the plaintiff wins
  double settlement_benefit = 0.0;  // S_B, defendant's settlement offer
  double admin_cost = 0.0;          // C_a, per trial
  double bargain_cost = 0.0;        // C_b, per negotiation / discovery stage
  double p_win = 0.0;               // p
  double q_settle = 0.0;            // q
  double p_appeal_win = 0.0;        // d
  double filing_cost = 0.0;         // FC
  double inflation_rate = 0.0;      // i, continuous compounding
  double horizon_years = 0.0;       // T
  double volatility = 0.0;          // sigma, annualized
  std::string currency = "USD";

  bool operator==(const DisputeScenario&) const = default;
};

// Throws ValidationError naming the first offending field. Horizon and
// volatility only need to be nonnegative here; pricing reports nonpositive
// values as an unpriceable scenario instead.
void validate(const DisputeScenario& s);

// Multiplies every money field by `factor`.
DisputeScenario scale_money(DisputeScenario s, double factor);

// The worked example: $10000 claim, $5000 offer, p=0.6, q=0.4, C_a=$1000,
// C_b=$500, i=1.9%, four months (0.3333 y), sigma=25%.
DisputeScenario reference_scenario();

}  // namespace litiquant

#pragma once

#include <optional>

#include "litiquant/scenario.hpp"

namespace litiquant {

// Phi(x) = erfc(-x / sqrt 2) / 2. glibc's erfc is accurate to a few ulp, so
// the absolute error is below 1e-15 everywhere (tested against an
// independent series at <= 1e-10).
double std_normal_cdf(double x);

// Throws NonPositiveInput unless evp, rb, sigma and t are all > 0.
double d1(double evp, double rb, double i, double sigma, double t);
double d2(double d1, double sigma, double t);

// Black-Scholes call on the claim, underlying EVP and strike R_B. Throws
// DegenerateStrike for rb <= 0 and NonPositiveInput for the other inputs.
double claim_value(double evp, double rb, double i, double sigma, double t);

// max(s_t - k, 0)
double intrinsic_payoff(double s_t, double k);

enum class UnpriceableReason {
  kNonPositiveStrike,
  kNonPositiveUnderlying,
  kNonPositiveVolatility,
  kNonPositiveHorizon,
};

const char* to_string(UnpriceableReason r);

struct FeasibleBand {
  double lo = 0.0;  // R_B, inclusive
  double hi = 0.0;  // F_B, inclusive
};

struct FairBargainQuote {
  double evp = 0.0;
  double rb = 0.0;
  double rate = 0.0;
  double horizon = 0.0;
  double sigma = 0.0;

  // Present only when priced.
  std::optional<double> d1;
  std::optional<double> d2;
  std::optional<double> n_d1;
  std::optional<double> n_d2;
  std::optional<double> claim_value;
  std::optional<double> fair_bargain;
  std::optional<FeasibleBand> feasible_band;

  std::optional<UnpriceableReason> unpriceable;
  // q == 1: the offer is accepted at the first node and no chain exists.
  bool settlement_at_offer = false;

  bool priced() const noexcept { return !unpriceable.has_value(); }
};

// EVP and R_B from the scenario, then Q and F_B = R_B + Q. Degenerate
// scenarios come back with `unpriceable` set and the pricing fields empty.
FairBargainQuote fair_bargain(const DisputeScenario& s);

enum class OfferClass { kBelowReasonable, kFeasible, kAboveFair };

const char* to_string(OfferClass c);

// Closed band [R_B, F_B]. Throws UnpricedQuote when the quote has no band.
OfferClass classify_offer(double offer, const FairBargainQuote& quote);

}  // namespace litiquant

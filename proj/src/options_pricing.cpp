#include "litiquant/options_pricing.hpp"

#include <cmath>

#include "litiquant/errors.hpp"
#include "litiquant/game_tree.hpp"
#include "litiquant/negotiation_chain.hpp"

namespace litiquant {

double std_normal_cdf(double x) {
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

double d1(double evp, double rb, double i, double sigma, double t) {
  if (!(rb > 0.0)) throw DegenerateStrike("strike (R_B) must be > 0");
  if (!(evp > 0.0)) throw NonPositiveInput("underlying (EVP) must be > 0");
  if (!(sigma > 0.0)) throw NonPositiveInput("volatility must be > 0");
  if (!(t > 0.0)) throw NonPositiveInput("horizon must be > 0");
  return (std::log(evp / rb) + (i + 0.5 * sigma * sigma) * t) /
         (sigma * std::sqrt(t));
}

double d2(double d1, double sigma, double t) {
  if (!(sigma > 0.0)) throw NonPositiveInput("volatility must be > 0");
  if (!(t > 0.0)) throw NonPositiveInput("horizon must be > 0");
  return d1 - sigma * std::sqrt(t);
}

double claim_value(double evp, double rb, double i, double sigma, double t) {
  const double a = d1(evp, rb, i, sigma, t);
  const double b = d2(a, sigma, t);
  return std_normal_cdf(a) * evp - std_normal_cdf(b) * rb * std::exp(-i * t);
}

double intrinsic_payoff(double s_t, double k) { return s_t > k ? s_t - k : 0.0; }

const char* to_string(UnpriceableReason r) {
  switch (r) {
    case UnpriceableReason::kNonPositiveStrike:
      return "nonpositive-strike";
    case UnpriceableReason::kNonPositiveUnderlying:
      return "nonpositive-underlying";
    case UnpriceableReason::kNonPositiveVolatility:
      return "nonpositive-volatility";
    case UnpriceableReason::kNonPositiveHorizon:
      return "nonpositive-horizon";
  }
  return "unknown";
}

FairBargainQuote fair_bargain(const DisputeScenario& s) {
  FairBargainQuote q;
  q.evp = evp(s);
  q.rb = reasonable_bargain(s);
  q.rate = s.inflation_rate;
  q.horizon = s.horizon_years;
  q.sigma = s.volatility;
  q.settlement_at_offer = s.q_settle == 1.0;

  if (!(q.rb > 0.0)) {
    q.unpriceable = UnpriceableReason::kNonPositiveStrike;
  } else if (!(q.evp > 0.0)) {
    q.unpriceable = UnpriceableReason::kNonPositiveUnderlying;
  } else if (!(q.sigma > 0.0)) {
    q.unpriceable = UnpriceableReason::kNonPositiveVolatility;
  } else if (!(q.horizon > 0.0)) {
    q.unpriceable = UnpriceableReason::kNonPositiveHorizon;
  }
  if (q.unpriceable) return q;

  const double a = d1(q.evp, q.rb, q.rate, q.sigma, q.horizon);
  const double b = d2(a, q.sigma, q.horizon);
  q.d1 = a;
  q.d2 = b;
  q.n_d1 = std_normal_cdf(a);
  q.n_d2 = std_normal_cdf(b);
  q.claim_value = *q.n_d1 * q.evp - *q.n_d2 * q.rb * std::exp(-q.rate * q.horizon);
  q.fair_bargain = q.rb + *q.claim_value;
  q.feasible_band = FeasibleBand{q.rb, *q.fair_bargain};
  return q;
}

const char* to_string(OfferClass c) {
  switch (c) {
    case OfferClass::kBelowReasonable:
      return "BELOW_REASONABLE";
    case OfferClass::kFeasible:
      return "FEASIBLE";
    case OfferClass::kAboveFair:
      return "ABOVE_FAIR";
  }
  return "UNKNOWN";
}

OfferClass classify_offer(double offer, const FairBargainQuote& quote) {
  if (!quote.feasible_band) throw UnpricedQuote("quote has no feasibility band");
  if (offer < quote.feasible_band->lo) return OfferClass::kBelowReasonable;
  if (offer > quote.feasible_band->hi) return OfferClass::kAboveFair;
  return OfferClass::kFeasible;
}

}  // namespace litiquant

#include "litiquant/options_pricing.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "litiquant/errors.hpp"
#include "litiquant/game_tree.hpp"
#include "litiquant/negotiation_chain.hpp"
#include "oracles/normal_cdf_series.hpp"

namespace litiquant {
namespace {

struct Inputs {
  double evp, rb, i, sigma, t;
};

Inputs random_inputs(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return {100.0 + 1e5 * unit(gen), 100.0 + 1e5 * unit(gen), 0.1 * unit(gen),
          0.01 + unit(gen), 0.05 + 5.0 * unit(gen)};
}

TEST(StdNormalCdf, KnownValues) {
  EXPECT_EQ(std_normal_cdf(0.0), 0.5);
  EXPECT_NEAR(std_normal_cdf(2.03), 0.9788, 1e-4);
  EXPECT_NEAR(std_normal_cdf(1.88), 0.9699, 1e-4);
  EXPECT_NEAR(std_normal_cdf(1.959963984540054), 0.975, 1e-15);
}

TEST(StdNormalCdf, MatchesSeriesOracle) {
  double worst = 0.0;
  for (int k = 0; k <= 20000; ++k) {
    const double x = -10.0 + 20.0 * k / 20000.0;
    const double ref = static_cast<double>(oracles::normal_cdf_series(x));
    worst = std::max(worst, std::abs(std_normal_cdf(x) - ref));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(StdNormalCdf, SymmetryAndMonotonicity) {
  double previous = 0.0;
  for (int k = 0; k <= 100000; ++k) {
    const double x = -8.0 + 16.0 * k / 100000.0;
    EXPECT_NEAR(std_normal_cdf(x) + std_normal_cdf(-x), 1.0, 1e-12);
    const double v = std_normal_cdf(x);
    // Above x ~ 6.5 neighbouring values round to the same double below 1.
    if (k > 0 && x < 6.5) ASSERT_GT(v, previous) << x;
    if (k > 0) ASSERT_GE(v, previous) << x;
    previous = v;
  }
}

TEST(D1, ReferenceValue) {
  EXPECT_NEAR(d1(5600.0, 4250.0, 0.019, 0.25, 0.3333), 2.02695, 5e-4);
}

TEST(D1, AtTheMoney) {
  EXPECT_NEAR(d1(100.0, 100.0, 0.0, 0.2, 1.0), 0.1, 1e-15);
}

TEST(D1, GrowsWithVolatility) {
  const double a = d1(100.0, 100.0, 0.0, 10.0, 1.0);
  const double b = d1(100.0, 100.0, 0.0, 100.0, 1.0);
  EXPECT_NEAR(a, 5.0, 1e-12);
  EXPECT_GT(b, a);
}

TEST(D1, RejectsNonPositiveInputs) {
  EXPECT_THROW(d1(0.0, 1.0, 0.0, 0.2, 1.0), NonPositiveInput);
  EXPECT_THROW(d1(1.0, 0.0, 0.0, 0.2, 1.0), DegenerateStrike);
  EXPECT_THROW(d1(1.0, -5.0, 0.0, 0.2, 1.0), DegenerateStrike);
  EXPECT_THROW(d1(1.0, 1.0, 0.0, 0.0, 1.0), NonPositiveInput);
  EXPECT_THROW(d1(1.0, 1.0, 0.0, 0.2, 0.0), NonPositiveInput);
}

TEST(D2, ReferenceValue) {
  EXPECT_NEAR(0.25 * std::sqrt(0.3333), 0.14433, 1e-5);
  EXPECT_NEAR(d2(d1(5600.0, 4250.0, 0.019, 0.25, 0.3333), 0.25, 0.3333), 1.88262, 5e-4);
  EXPECT_NEAR(d2(0.1, 0.1, 1.0), 0.0, 1e-17);
}

TEST(ClaimValue, ReferenceValue) {
  const double q = claim_value(5600.0, 4250.0, 0.019, 0.25, 0.3333);
  EXPECT_NEAR(q, 1385.23, 5.0);
  EXPECT_NEAR(q, 1383.5, 0.1);
}

TEST(ClaimValue, ZeroVolatilityLimitIsDiscountedIntrinsic) {
  const double q = claim_value(5600.0, 4250.0, 0.019, 1e-8, 0.3333);
  const double limit = 5600.0 - 4250.0 * std::exp(-0.019 * 0.3333);
  EXPECT_NEAR(q, limit, 1e-6 * 5600.0);
}

TEST(ClaimValue, WorthlessUnderlying) {
  EXPECT_NEAR(claim_value(1e-6, 4250.0, 0.019, 0.25, 0.3333), 0.0, 1e-12);
}

TEST(IntrinsicPayoff, Values) {
  EXPECT_EQ(intrinsic_payoff(5600.0, 4250.0), 1350.0);
  EXPECT_EQ(intrinsic_payoff(4250.0, 4250.0), 0.0);
  EXPECT_EQ(intrinsic_payoff(4000.0, 4250.0), 0.0);
}

TEST(FairBargain, ReferenceQuote) {
  const FairBargainQuote q = fair_bargain(reference_scenario());
  ASSERT_TRUE(q.priced());
  EXPECT_DOUBLE_EQ(q.evp, 5600.0);
  EXPECT_DOUBLE_EQ(q.rb, 4250.0);
  EXPECT_NEAR(*q.fair_bargain, 5635.0, 5.0);
  EXPECT_EQ(*q.fair_bargain, q.rb + *q.claim_value);
  EXPECT_EQ(*q.d2, *q.d1 - q.sigma * std::sqrt(q.horizon));
  EXPECT_EQ(q.feasible_band->lo, 4250.0);
  EXPECT_EQ(q.feasible_band->hi, *q.fair_bargain);
  EXPECT_FALSE(q.settlement_at_offer);
}

TEST(FairBargain, CertainSettlementFlagsOffer) {
  DisputeScenario s = reference_scenario();
  s.q_settle = 1.0;
  const FairBargainQuote q = fair_bargain(s);
  EXPECT_TRUE(q.settlement_at_offer);
  EXPECT_DOUBLE_EQ(q.evp, s.settlement_benefit);
}

TEST(FairBargain, ZeroVolatilityLimit) {
  DisputeScenario s = reference_scenario();
  s.volatility = 1e-8;
  const FairBargainQuote q = fair_bargain(s);
  const double expected = 4250.0 + (5600.0 - 4250.0 * std::exp(-0.019 * 0.3333));
  EXPECT_NEAR(*q.fair_bargain, expected, 1e-6 * 5600.0);
}

TEST(FairBargain, UnpriceableReasons) {
  DisputeScenario s = reference_scenario();
  s.admin_cost = 20000.0;
  FairBargainQuote q = fair_bargain(s);
  EXPECT_EQ(q.unpriceable, UnpriceableReason::kNonPositiveStrike);
  EXPECT_FALSE(q.claim_value.has_value());
  EXPECT_FALSE(q.fair_bargain.has_value());
  EXPECT_FALSE(q.feasible_band.has_value());

  s = reference_scenario();
  s.volatility = 0.0;
  EXPECT_EQ(fair_bargain(s).unpriceable, UnpriceableReason::kNonPositiveVolatility);
  s = reference_scenario();
  s.horizon_years = 0.0;
  EXPECT_EQ(fair_bargain(s).unpriceable, UnpriceableReason::kNonPositiveHorizon);
}

TEST(ClassifyOffer, ClosedBand) {
  const FairBargainQuote q = fair_bargain(reference_scenario());
  EXPECT_EQ(classify_offer(5000.0, q), OfferClass::kFeasible);
  EXPECT_EQ(classify_offer(q.rb, q), OfferClass::kFeasible);
  EXPECT_EQ(classify_offer(*q.fair_bargain, q), OfferClass::kFeasible);
  EXPECT_EQ(classify_offer(4249.99, q), OfferClass::kBelowReasonable);
  EXPECT_EQ(classify_offer(1e9, q), OfferClass::kAboveFair);
}

TEST(ClassifyOffer, UnpricedQuote) {
  DisputeScenario s = reference_scenario();
  s.bargain_cost = 5000.0;
  EXPECT_THROW(classify_offer(1000.0, fair_bargain(s)), UnpricedQuote);
}

TEST(PricingProperties, BoundsParityAndMonotonicity) {
  std::mt19937_64 gen(31337);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n < 10000; ++n) {
    const Inputs in = random_inputs(gen);
    const double disc = in.rb * std::exp(-in.i * in.t);
    const double q = claim_value(in.evp, in.rb, in.i, in.sigma, in.t);
    const double eps = 1e-9 * in.evp;
    ASSERT_GE(q, std::max(in.evp - disc, 0.0) - eps);
    ASSERT_LE(q, in.evp + eps);

    const double a = d1(in.evp, in.rb, in.i, in.sigma, in.t);
    const double b = d2(a, in.sigma, in.t);
    const double put = disc * std_normal_cdf(-b) - in.evp * std_normal_cdf(-a);
    ASSERT_NEAR(q - put, in.evp - disc, 1e-9 * std::max(in.evp, in.rb));

    const double bump = 1.0 + unit(gen);
    ASSERT_GE(claim_value(in.evp, in.rb, in.i, in.sigma * bump, in.t), q - eps);
    ASSERT_GE(claim_value(in.evp * bump, in.rb, in.i, in.sigma, in.t), q - eps);
    ASSERT_LE(claim_value(in.evp, in.rb * bump, in.i, in.sigma, in.t), q + eps);
  }
}

}  // namespace
}  // namespace litiquant

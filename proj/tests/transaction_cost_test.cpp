#include "litiquant/transaction_cost.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "litiquant/errors.hpp"
#include "litiquant/game_tree.hpp"
#include "test_support.hpp"

namespace litiquant {
namespace {

using testing::close_rel;
using testing::money_scale;
using testing::random_scenario;

// Brute-force argmax of u(pc - lc, lc) on `points` evenly spaced lc values.
double grid_argmax(double pc, const UtilitySpec& u, int points) {
  double best_lc = 0.0;
  double best_u = u(pc, 0.0);
  for (int k = 1; k < points; ++k) {
    const double lc = pc * static_cast<double>(k) / (points - 1);
    const double v = u(pc - lc, lc);
    if (v > best_u) {
      best_u = v;
      best_lc = lc;
    }
  }
  return best_lc;
}

DisputeScenario with_pc(double pc) {
  DisputeScenario s;
  s.settlement_benefit = 2.0 * pc;
  return s;
}

TEST(Decompose, ReferenceValues) {
  const CostDecomposition d = decompose(reference_scenario());
  EXPECT_DOUBLE_EQ(d.pc, 5500.0);
  EXPECT_DOUBLE_EQ(d.lc, 1250.0);
  EXPECT_DOUBLE_EQ(d.rb, 4250.0);
  EXPECT_EQ(classify_regime(d), Regime::kFeasible);
}

TEST(Decompose, ZeroCostIsMaxBargain) {
  DisputeScenario s = reference_scenario();
  s.admin_cost = 0.0;
  s.bargain_cost = 0.0;
  const CostDecomposition d = decompose(s);
  EXPECT_EQ(d.lc, 0.0);
  EXPECT_EQ(d.rb, d.pc);
  EXPECT_EQ(classify_regime(d), Regime::kMaxBargain);
}

TEST(ClassifyRegime, NoBargainWhenCostsConsumeBenefit) {
  EXPECT_EQ(classify_regime({5500.0, 5500.0, 0.0}), Regime::kNoBargain);
  EXPECT_EQ(classify_regime({5500.0, 1.5 * 5500.0, -0.5 * 5500.0}), Regime::kNoBargain);
  DisputeScenario s = reference_scenario();
  s.admin_cost = 11000.0;  // lc = 5500 + 750 > pc
  EXPECT_EQ(classify_regime(decompose(s)), Regime::kNoBargain);
}

TEST(Decompose, MatchesReasonableBargainEverywhere) {
  std::mt19937_64 gen(11);
  for (int k = 0; k < 10000; ++k) {
    const DisputeScenario s = random_scenario(gen);
    const CostDecomposition d = decompose(s);
    ASSERT_TRUE(close_rel(d.rb, reasonable_bargain(s), 1e-12, money_scale(s)));
    ASSERT_TRUE(close_rel(d.rb, d.pc - d.lc, 1e-12, money_scale(s)));
  }
}

TEST(SweepLc, Endpoints) {
  const auto u = UtilitySpec::deterrence_weighted(0.001);
  const auto pts = sweep_lc(with_pc(5500.0), {0.0, 5500.0, 2}, u);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].lc, 0.0);
  EXPECT_EQ(pts[0].rb, 5500.0);
  EXPECT_EQ(pts[0].utility, 0.0);
  EXPECT_EQ(pts[1].lc, 5500.0);
  EXPECT_EQ(pts[1].rb, 0.0);
}

TEST(SweepLc, LinearAndStrictlyDecreasing) {
  const DisputeScenario s = reference_scenario();
  const auto pts = sweep_lc(s, {0.0, 5500.0, 11}, default_utility(s));
  ASSERT_EQ(pts.size(), 11u);
  EXPECT_DOUBLE_EQ(pts[5].lc, 2750.0);
  EXPECT_DOUBLE_EQ(pts[5].rb, 2750.0);
  for (std::size_t k = 1; k < pts.size(); ++k) EXPECT_LT(pts[k].rb, pts[k - 1].rb);
}

TEST(SweepLc, MonotoneOnRandomScenarios) {
  std::mt19937_64 gen(3);
  for (int k = 0; k < 200; ++k) {
    const DisputeScenario s = random_scenario(gen);
    const double pc = decompose(s).pc;
    if (pc <= 0.0) continue;
    const auto pts = sweep_lc(s, {0.1 * pc, 0.9 * pc, 37}, default_utility(s));
    for (std::size_t j = 1; j < pts.size(); ++j) ASSERT_LT(pts[j].rb, pts[j - 1].rb);
  }
}

TEST(SweepLc, RejectsBadGrids) {
  const DisputeScenario s = reference_scenario();
  const auto u = default_utility(s);
  EXPECT_THROW(sweep_lc(s, {100.0, 50.0, 5}, u), InvalidGrid);
  EXPECT_THROW(sweep_lc(s, {0.0, 100.0, 1}, u), InvalidGrid);
  EXPECT_THROW(sweep_lc(s, {-1.0, 100.0, 5}, u), InvalidGrid);
  EXPECT_THROW(sweep_lc(s, {0.0, 6000.0, 5}, u), InvalidGrid);
}

TEST(OptimalLc, DeterrenceUtilityMatchesBruteForce) {
  const DisputeScenario s = reference_scenario();
  const auto u = UtilitySpec::deterrence_weighted(0.001);
  const double tol = 1e-6 * 5500.0;
  const OptimalCost opt = optimal_lc(s, u, tol);
  const double oracle = grid_argmax(5500.0, u, 1000000);
  EXPECT_NEAR(opt.lc_star, oracle, tol);
  EXPECT_DOUBLE_EQ(opt.rb_star, 5500.0 - opt.lc_star);
  EXPECT_DOUBLE_EQ(opt.utility_star, u(opt.rb_star, opt.lc_star));
}

TEST(OptimalLc, CornerSolutionWhenUtilityIgnoresCost) {
  const auto u = UtilitySpec::user_supplied([](double rb, double) { return rb; });
  const OptimalCost opt = optimal_lc(reference_scenario(), u, 1e-3);
  EXPECT_EQ(opt.lc_star, 0.0);
  EXPECT_EQ(opt.rb_star, 5500.0);
}

TEST(OptimalLc, ConstructedPeak) {
  const auto u =
      UtilitySpec::user_supplied([](double, double lc) { return -std::abs(lc - 1250.0); });
  const OptimalCost opt = optimal_lc(reference_scenario(), u, 1e-4);
  EXPECT_NEAR(opt.lc_star, 1250.0, 1e-4);
}

TEST(OptimalLc, DegenerateBudget) {
  DisputeScenario s;
  EXPECT_THROW(optimal_lc(s, UtilitySpec::deterrence_weighted(1.0), 1e-3), DegenerateBudget);
  EXPECT_THROW(default_utility(s), DegenerateBudget);
}

TEST(OptimalLc, InteriorAndMoreEfficientThanExtremes) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> k_dist(0.1, 20.0);
  for (int n = 0; n < 300; ++n) {
    const DisputeScenario s = random_scenario(gen);
    const double pc = decompose(s).pc;
    if (pc <= 0.0) continue;
    const auto u = UtilitySpec::deterrence_weighted(k_dist(gen) / pc);
    const OptimalCost opt = optimal_lc(s, u, 1e-6 * pc);
    EXPECT_GT(opt.lc_star, 0.0);
    EXPECT_LT(opt.lc_star, pc);
    EXPECT_GT(opt.utility_star, u(pc, 0.0));
    EXPECT_GT(opt.utility_star, u(pc - 0.999 * pc, 0.999 * pc));
  }
}

TEST(OptimalLc, DefaultUsesScenarioScale) {
  const DisputeScenario s = reference_scenario();
  const OptimalCost a = optimal_lc(s);
  const OptimalCost b = optimal_lc(s, UtilitySpec::deterrence_weighted(1.0 / 5500.0), 5.5e-3);
  EXPECT_EQ(a.lc_star, b.lc_star);
}

TEST(CostSplit, ReferenceInversion) {
  const CostSplit c = cost_split(1250.0, FixedAdmin{1000.0});
  EXPECT_DOUBLE_EQ(c.ca, 1000.0);
  EXPECT_DOUBLE_EQ(c.cb, 500.0);
  const CostSplit d = cost_split(1250.0, FixedBargain{500.0});
  EXPECT_DOUBLE_EQ(d.ca, 1000.0);
}

TEST(CostSplit, ZeroBudget) {
  const CostSplit c = cost_split(0.0, FixedAdmin{0.0});
  EXPECT_EQ(c.ca, 0.0);
  EXPECT_EQ(c.cb, 0.0);
  EXPECT_THROW(cost_split(0.0, FixedAdmin{1.0}), InfeasibleSplit);
}

TEST(CostSplit, Infeasible) {
  EXPECT_THROW(cost_split(1250.0, FixedAdmin{3000.0}), InfeasibleSplit);
  EXPECT_THROW(cost_split(1250.0, FixedBargain{900.0}), InfeasibleSplit);
  EXPECT_THROW(cost_split(-1.0, FixedAdmin{0.0}), InfeasibleSplit);
}

TEST(CostSplit, RoundTripsThroughDecompose) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n < 5000; ++n) {
    const double lc_star = 1e4 * unit(gen);
    const double ca = 2.0 * lc_star * unit(gen);
    const CostSplit split = cost_split(lc_star, FixedAdmin{ca});
    DisputeScenario s = reference_scenario();
    s.admin_cost = split.ca;
    s.bargain_cost = split.cb;
    ASSERT_TRUE(close_rel(decompose(s).lc, lc_star, 1e-12, lc_star));
  }
}

TEST(CostSplit, FreeComponentFallsAsFixedComponentGrows) {
  const double lc_star = 1250.0;
  double previous = cost_split(lc_star, FixedAdmin{0.0}).cb;
  for (double ca = 100.0; ca <= 2500.0; ca += 100.0) {
    const double cb = cost_split(lc_star, FixedAdmin{ca}).cb;
    EXPECT_LT(cb, previous);
    previous = cb;
  }
}

}  // namespace
}  // namespace litiquant

#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "litiquant/scenario.hpp"

namespace litiquant {

// R_B split into an expected-benefit part P_C and a transaction-cost part L_C.
struct CostDecomposition {
  double pc = 0.0;
  double lc = 0.0;
  double rb = 0.0;
};

enum class Regime { kMaxBargain, kFeasible, kNoBargain };

const char* to_string(Regime r);

CostDecomposition decompose(const DisputeScenario& s);

// NO_BARGAIN when rb <= 0, MAX_BARGAIN when lc == 0, otherwise FEASIBLE.
Regime classify_regime(const CostDecomposition& d);

// Utility over (rb, lc). The default is deterrence-weighted:
//   U(rb, lc) = rb * (1 - exp(-k * lc))
// which is zero at both lc = 0 and lc = pc and strictly positive in between.
struct UtilitySpec {
  enum class Kind { kDeterrenceWeighted, kUserSupplied };

  Kind kind = Kind::kDeterrenceWeighted;
  double deterrence_rate = 0.0;
  std::function<double(double rb, double lc)> evaluator;

  double operator()(double rb, double lc) const;

  static UtilitySpec deterrence_weighted(double k);
  static UtilitySpec user_supplied(std::function<double(double, double)> f);
};

// Deterrence-weighted utility with k = 1 / P_C. Throws DegenerateBudget when
// P_C <= 0.
UtilitySpec default_utility(const DisputeScenario& s);

struct LcGrid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 2;
};

struct LcPoint {
  double lc = 0.0;
  double rb = 0.0;
  double utility = 0.0;
};

// Evenly spaced evaluation of rb = pc - lc and the utility. Throws InvalidGrid
// for lo > hi, lo < 0, hi > pc or steps < 2.
std::vector<LcPoint> sweep_lc(const DisputeScenario& s, const LcGrid& grid,
                              const UtilitySpec& u);

struct OptimalCost {
  double lc_star = 0.0;
  double rb_star = 0.0;
  double utility_star = 0.0;
};

inline constexpr std::size_t kCoarseGridPoints = 64;

// Maximizes u(pc - lc, lc) over lc in [0, pc]: a 64-point scan picks the
// bracket, golden-section search narrows it below `tol`. Exact for unimodal
// utilities; otherwise the result is at least as good as the best scanned
// point. Throws DegenerateBudget if pc <= 0 and InvalidGrid if tol <= 0.
OptimalCost optimal_lc(const DisputeScenario& s, const UtilitySpec& u,
                       double tol);

// Same with the default utility and tol = 1e-6 * pc.
OptimalCost optimal_lc(const DisputeScenario& s);

struct FixedAdmin {
  double amount = 0.0;
};
struct FixedBargain {
  double amount = 0.0;
};
using FixedComponent = std::variant<FixedAdmin, FixedBargain>;

struct CostSplit {
  double ca = 0.0;
  double cb = 0.0;
};

// Solves (ca + 3 cb) / 2 == lc_star for the free component. Throws
// InfeasibleSplit if that component would be negative.
CostSplit cost_split(double lc_star, const FixedComponent& fixed);

}  // namespace litiquant

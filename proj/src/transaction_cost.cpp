#include "litiquant/transaction_cost.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "litiquant/errors.hpp"

namespace litiquant {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::kMaxBargain:
      return "MAX_BARGAIN";
    case Regime::kFeasible:
      return "FEASIBLE";
    case Regime::kNoBargain:
      return "NO_BARGAIN";
  }
  return "UNKNOWN";
}

CostDecomposition decompose(const DisputeScenario& s) {
  CostDecomposition d;
  d.pc = 0.5 * (s.p_win * s.winning_benefit + s.settlement_benefit);
  d.lc = 0.5 * (s.admin_cost + 3.0 * s.bargain_cost);
  d.rb = d.pc - d.lc;
  return d;
}

Regime classify_regime(const CostDecomposition& d) {
  if (d.rb <= 0.0) return Regime::kNoBargain;
  if (d.lc == 0.0) return Regime::kMaxBargain;
  return Regime::kFeasible;
}

double UtilitySpec::operator()(double rb, double lc) const {
  if (kind == Kind::kUserSupplied) return evaluator(rb, lc);
  return rb * -std::expm1(-deterrence_rate * lc);
}

UtilitySpec UtilitySpec::deterrence_weighted(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ValidationError("k", "deterrence rate must be finite and > 0");
  }
  UtilitySpec u;
  u.kind = Kind::kDeterrenceWeighted;
  u.deterrence_rate = k;
  return u;
}

UtilitySpec UtilitySpec::user_supplied(std::function<double(double, double)> f) {
  if (!f) throw ValidationError("evaluator", "must be callable");
  UtilitySpec u;
  u.kind = Kind::kUserSupplied;
  u.evaluator = std::move(f);
  return u;
}

UtilitySpec default_utility(const DisputeScenario& s) {
  const double pc = decompose(s).pc;
  if (!(pc > 0.0)) throw DegenerateBudget("P_C must be > 0");
  return UtilitySpec::deterrence_weighted(1.0 / pc);
}

std::vector<LcPoint> sweep_lc(const DisputeScenario& s, const LcGrid& grid,
                              const UtilitySpec& u) {
  const double pc = decompose(s).pc;
  if (grid.steps < 2) throw InvalidGrid("steps must be >= 2");
  if (!(grid.lo <= grid.hi)) throw InvalidGrid("lo must be <= hi");
  if (grid.lo < 0.0) throw InvalidGrid("lo must be >= 0");
  if (grid.hi > pc) throw InvalidGrid("hi must be <= P_C");

  std::vector<LcPoint> out;
  out.reserve(grid.steps);
  const double span = grid.hi - grid.lo;
  const double last = static_cast<double>(grid.steps - 1);
  for (std::size_t k = 0; k < grid.steps; ++k) {
    const double lc = k + 1 == grid.steps
                          ? grid.hi
                          : grid.lo + span * (static_cast<double>(k) / last);
    const double rb = pc - lc;
    out.push_back({lc, rb, u(rb, lc)});
  }
  return out;
}

OptimalCost optimal_lc(const DisputeScenario& s, const UtilitySpec& u,
                       double tol) {
  const double pc = decompose(s).pc;
  if (!(pc > 0.0)) throw DegenerateBudget("P_C must be > 0");
  if (!(tol > 0.0)) throw ValidationError("tol", "must be > 0");

  auto objective = [&](double lc) { return u(pc - lc, lc); };

  constexpr std::size_t n = kCoarseGridPoints;
  auto grid_x = [&](std::size_t i) {
    return i + 1 == n ? pc : pc * (static_cast<double>(i) / (n - 1));
  };
  std::size_t best = 0;
  double best_u = objective(grid_x(0));
  for (std::size_t i = 1; i < n; ++i) {
    const double v = objective(grid_x(i));
    if (v > best_u) {
      best = i;
      best_u = v;
    }
  }

  double a = grid_x(best == 0 ? 0 : best - 1);
  double b = grid_x(std::min(best + 1, n - 1));

  // Stop once the bracket is a quarter of tol so the midpoint is well inside.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  for (int iter = 0; iter < 400 && b - a > 0.25 * tol; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = objective(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = objective(x1);
    }
  }

  double lc_star = 0.5 * (a + b);
  double u_star = objective(lc_star);
  if (best_u > u_star) {
    lc_star = grid_x(best);
    u_star = best_u;
  }
  return {lc_star, pc - lc_star, u_star};
}

OptimalCost optimal_lc(const DisputeScenario& s) {
  const UtilitySpec u = default_utility(s);
  return optimal_lc(s, u, 1e-6 * decompose(s).pc);
}

CostSplit cost_split(double lc_star, const FixedComponent& fixed) {
  if (!(lc_star >= 0.0) || !std::isfinite(lc_star)) {
    throw InfeasibleSplit("lc_star must be finite and >= 0");
  }
  const double budget = 2.0 * lc_star;
  if (const auto* admin = std::get_if<FixedAdmin>(&fixed)) {
    if (admin->amount < 0.0) throw InfeasibleSplit("fixed admin cost is negative");
    const double cb = (budget - admin->amount) / 3.0;
    if (cb < 0.0) {
      throw InfeasibleSplit("admin cost " + std::to_string(admin->amount) +
                            " exceeds the budget 2*lc_star");
    }
    return {admin->amount, cb};
  }
  const auto& bargain = std::get<FixedBargain>(fixed);
  if (bargain.amount < 0.0) throw InfeasibleSplit("fixed bargain cost is negative");
  const double ca = budget - 3.0 * bargain.amount;
  if (ca < 0.0) {
    throw InfeasibleSplit("bargain cost " + std::to_string(bargain.amount) +
                          " exceeds the budget 2*lc_star / 3");
  }
  return {ca, bargain.amount};
}

}  // namespace litiquant

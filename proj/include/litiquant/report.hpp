#pragma once

#include <optional>
#include <string>
#include <vector>

#include "litiquant/game_tree.hpp"
#include "litiquant/negotiation_chain.hpp"
#include "litiquant/options_pricing.hpp"
#include "litiquant/scenario_io.hpp"
#include "litiquant/transaction_cost.hpp"

namespace litiquant {

struct AnalysisReport {
  DisputeScenario scenario;
  BargainAnalysis bargain;
  FilingViability filing;
  CostDecomposition decomposition;
  Regime regime = Regime::kFeasible;
  double evp = 0.0;
  FairBargainQuote quote;
  std::vector<std::string> warnings;
};

// Validates, then runs every analysis. Economic degeneracy (negative R_B,
// q = 1, zero volatility, ...) is reported through warnings and an unpriced
// quote, never as an exception.
AnalysisReport analyze(const DisputeScenario& s);

// Canonical serialization: fixed key order, values rounded to 6 decimals,
// with a parallel "_exact" block at full precision. Ends in a newline. The
// CLI and the HTTP service both emit exactly these bytes.
ordered_json report_to_json(const AnalysisReport& r);
std::string to_canonical_json(const AnalysisReport& r);

std::string to_text(const AnalysisReport& r);
std::string to_csv(const AnalysisReport& r);

double round_display(double v);

// Overrides applied on top of the scenario's p, q and W_B.
struct SimulationOptions {
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> max_rounds;
  std::optional<TerminalRule> terminal_rule;
  std::optional<unsigned> workers;
};

struct SimulationResult {
  ChainConfig config;
  ChainEstimate estimate;
};

SimulationResult run_simulation(const DisputeScenario& s,
                                const SimulationOptions& opts);
ordered_json simulation_to_json(const SimulationResult& r);

TerminalRule parse_terminal_rule(std::string_view name);

struct OptimalCostReport {
  CostDecomposition decomposition;
  std::optional<double> k;
  std::optional<double> tol;
  std::optional<OptimalCost> optimum;
  // Splits of lc_star holding the scenario's own C_a (resp. C_b) fixed.
  std::optional<CostSplit> split_fixed_admin;
  std::optional<CostSplit> split_fixed_bargain;
  std::vector<std::string> warnings;
};

// Default k = 1 / P_C, default tol = 1e-6 * P_C.
OptimalCostReport optimal_cost_report(const DisputeScenario& s,
                                      std::optional<double> k,
                                      std::optional<double> tol);
ordered_json optimal_cost_to_json(const OptimalCostReport& r);

}  // namespace litiquant

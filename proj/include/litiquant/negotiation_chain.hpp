#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "litiquant/scenario.hpp"

namespace litiquant {

// What happens when a walk would renegotiate past the last node P_N.
enum class TerminalRule {
  kForcedTrial,  // go to trial anyway
  kAbandon,      // claim is dropped, payoff 0
};

const char* to_string(TerminalRule r);

// Renegotiation nodes are P_0 ... P_N with N = max_rounds. At each node the
// walk renegotiates with probability q_settle, otherwise it goes to trial and
// wins winning_benefit with probability p_win.
struct ChainConfig {
  double p_win = 0.0;
  double q_settle = 0.0;
  double winning_benefit = 0.0;
  std::uint32_t max_rounds = 64;
  TerminalRule terminal_rule = TerminalRule::kForcedTrial;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0 = hardware concurrency
};

// Throws ValidationError. `for_simulation` additionally requires q < 1 and
// trials >= 1.
void validate(const ChainConfig& c, bool for_simulation);

struct ChainEstimate {
  double closed_form = 0.0;
  double truncated = 0.0;
  double monte_carlo_mean = 0.0;
  double monte_carlo_stderr = 0.0;
  std::uint64_t trials = 0;
  // rounds_histogram[k] counts walks that left the chain at node P_k;
  // the final bin (index max_rounds + 1) counts terminal-rule exits.
  std::vector<std::uint64_t> rounds_histogram;
  unsigned workers = 0;
  std::uint64_t seed = 0;

  bool operator==(const ChainEstimate&) const = default;
};

// Infinite-chain expectation p * w.
double chain_limit(double p, double w);

// E(P_0) from the recursion E(P_n) = q E(P_{n+1}) + (1-q) p W_B evaluated
// backwards from the terminal node.
double chain_truncated(const ChainConfig& c);

// Walks are grouped into fixed-size blocks; block b draws from its own
// generator seeded by mixing (seed, b). Blocks are distributed over
// `workers` threads and reduced in block order, so the estimate depends only
// on (config, seed), never on the worker count.
ChainEstimate simulate_chain(const ChainConfig& c);

inline constexpr std::uint64_t kWalksPerBlock = 1u << 14;

// Expected value of the litigation payoff, q*S_B + (1-q)*p*W_B.
double evp(const DisputeScenario& s);

// Chain parameters taken from the scenario (p, q, W_B) with defaults
// elsewhere.
ChainConfig chain_config_for(const DisputeScenario& s);

}  // namespace litiquant

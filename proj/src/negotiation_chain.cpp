#include "litiquant/negotiation_chain.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "litiquant/errors.hpp"

namespace litiquant {
namespace {

constexpr std::uint32_t kMaxRoundsLimit = 100000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; avoids the implementation-defined
// std::uniform_real_distribution so streams match across standard libraries.
double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

struct Tally {
  std::uint64_t wins = 0;
  std::vector<std::uint64_t> histogram;
};

void run_block(const ChainConfig& c, std::uint64_t block, std::uint64_t walks,
               Tally& tally) {
  std::mt19937_64 gen(splitmix64(c.seed ^ splitmix64(block)));
  const std::uint32_t last = c.max_rounds;
  for (std::uint64_t w = 0; w < walks; ++w) {
    std::uint32_t round = 0;
    while (round <= last && unit_uniform(gen) < c.q_settle) ++round;
    ++tally.histogram[round];
    const bool tried = round <= last || c.terminal_rule == TerminalRule::kForcedTrial;
    if (tried && unit_uniform(gen) < c.p_win) ++tally.wins;
  }
}

}  // namespace

const char* to_string(TerminalRule r) {
  return r == TerminalRule::kForcedTrial ? "forced-trial" : "abandon";
}

void validate(const ChainConfig& c, bool for_simulation) {
  if (!std::isfinite(c.p_win) || c.p_win < 0.0 || c.p_win > 1.0) {
    throw ValidationError("p_win", "must be in [0, 1]");
  }
  if (!std::isfinite(c.q_settle) || c.q_settle < 0.0 || c.q_settle > 1.0) {
    throw ValidationError("q_settle", "must be in [0, 1]");
  }
  if (!std::isfinite(c.winning_benefit) || c.winning_benefit < 0.0) {
    throw ValidationError("winning_benefit", "must be finite and >= 0");
  }
  if (c.max_rounds > kMaxRoundsLimit) {
    throw ValidationError("max_rounds", "must be <= " + std::to_string(kMaxRoundsLimit));
  }
  if (for_simulation) {
    if (c.q_settle >= 1.0) {
      throw ValidationError("q_settle", "must be < 1 for simulation");
    }
    if (c.trials < 1) throw ValidationError("trials", "must be >= 1");
  }
}

double chain_limit(double p, double w) { return p * w; }

double chain_truncated(const ChainConfig& c) {
  validate(c, false);
  const double trial = c.p_win * c.winning_benefit;
  const double q = c.q_settle;
  double e = c.terminal_rule == TerminalRule::kForcedTrial ? trial : 0.0;
  for (std::uint32_t n = 0; n <= c.max_rounds; ++n) {
    e = q * e + (1.0 - q) * trial;
  }
  return e;
}

ChainEstimate simulate_chain(const ChainConfig& c) {
  validate(c, true);

  const std::uint64_t blocks = (c.trials + kWalksPerBlock - 1) / kWalksPerBlock;
  unsigned workers = c.workers != 0 ? c.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(blocks, 1)));

  const std::size_t bins = static_cast<std::size_t>(c.max_rounds) + 2;
  std::vector<Tally> tallies(workers);
  for (auto& t : tallies) t.histogram.assign(bins, 0);

  // Counts are integers, so merging per-worker tallies is order-independent.
  std::atomic<std::uint64_t> next{0};
  auto work = [&](Tally& tally) {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t begin = b * kWalksPerBlock;
      const std::uint64_t walks = std::min(kWalksPerBlock, c.trials - begin);
      run_block(c, b, walks, tally);
    }
  };
  if (workers == 1) {
    work(tallies[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(tallies[w]));
  }

  ChainEstimate est;
  est.closed_form = chain_limit(c.p_win, c.winning_benefit);
  est.truncated = chain_truncated(c);
  est.trials = c.trials;
  est.workers = workers;
  est.seed = c.seed;
  est.rounds_histogram.assign(bins, 0);
  std::uint64_t wins = 0;
  for (const auto& t : tallies) {
    wins += t.wins;
    for (std::size_t k = 0; k < bins; ++k) est.rounds_histogram[k] += t.histogram[k];
  }

  // Each payoff is either 0 or W_B, so mean and sample variance follow from
  // the win count alone.
  const double n = static_cast<double>(c.trials);
  const double share = static_cast<double>(wins) / n;
  est.monte_carlo_mean = share * c.winning_benefit;
  if (c.trials > 1) {
    const double var = share * (1.0 - share) * c.winning_benefit *
                       c.winning_benefit * n / (n - 1.0);
    est.monte_carlo_stderr = std::sqrt(var / n);
  }
  return est;
}

double evp(const DisputeScenario& s) {
  const double q = s.q_settle;
  return q * s.settlement_benefit + (1.0 - q) * (s.p_win * s.winning_benefit);
}

ChainConfig chain_config_for(const DisputeScenario& s) {
  ChainConfig c;
  c.p_win = s.p_win;
  c.q_settle = s.q_settle;
  c.winning_benefit = s.winning_benefit;
  return c;
}

}  // namespace litiquant

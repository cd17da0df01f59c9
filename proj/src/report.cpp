#include "litiquant/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "litiquant/errors.hpp"

namespace litiquant {
namespace {

using Rounder = double (*)(double);

double identity(double v) { return v; }

template <typename T>
ordered_json optional_number(const std::optional<T>& v, Rounder round) {
  return v ? ordered_json(round(*v)) : ordered_json(nullptr);
}

ordered_json bargain_json(const AnalysisReport& r, Rounder round) {
  const auto& b = r.bargain;
  ordered_json j = ordered_json::object();
  j["eva"] = round(b.eva);
  j["evt"] = round(b.evt);
  j["evb"] = round(b.evb);
  j["evc"] = round(b.evc);
  j["threat_value"] = round(b.threat_value);
  j["noncoop_bargain"] = round(b.noncoop_bargain);
  j["coop_bargain"] = round(b.coop_bargain);
  j["coop_surplus"] = round(b.coop_surplus);
  j["reasonable_bargain"] = round(b.reasonable_bargain);
  j["filing_cost"] = round(r.filing.filing_cost);
  j["filing_viable"] = r.filing.viable;
  return j;
}

ordered_json decomposition_json(const AnalysisReport& r, Rounder round) {
  ordered_json j = ordered_json::object();
  j["pc"] = round(r.decomposition.pc);
  j["lc"] = round(r.decomposition.lc);
  j["rb"] = round(r.decomposition.rb);
  j["regime"] = to_string(r.regime);
  return j;
}

ordered_json quote_json(const FairBargainQuote& q, Rounder round) {
  ordered_json j = ordered_json::object();
  j["priced"] = q.priced();
  j["unpriceable_reason"] =
      q.unpriceable ? ordered_json(to_string(*q.unpriceable)) : ordered_json(nullptr);
  j["settlement_at_offer"] = q.settlement_at_offer;
  j["evp"] = round(q.evp);
  j["rb"] = round(q.rb);
  j["rate"] = round(q.rate);
  j["horizon"] = round(q.horizon);
  j["sigma"] = round(q.sigma);
  j["d1"] = optional_number(q.d1, round);
  j["d2"] = optional_number(q.d2, round);
  j["n_d1"] = optional_number(q.n_d1, round);
  j["n_d2"] = optional_number(q.n_d2, round);
  j["claim_value"] = optional_number(q.claim_value, round);
  j["fair_bargain"] = optional_number(q.fair_bargain, round);
  if (q.feasible_band) {
    j["feasible_band"] = {{"lo", round(q.feasible_band->lo)},
                          {"hi", round(q.feasible_band->hi)}};
  } else {
    j["feasible_band"] = nullptr;
  }
  return j;
}

std::string money(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void line(std::ostringstream& out, const char* label, const std::string& value) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-40s %16s\n", label, value.c_str());
  out << buf;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

double round_display(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  if (!std::isfinite(r)) return v;
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

AnalysisReport analyze(const DisputeScenario& s) {
  validate(s);
  AnalysisReport r;
  r.scenario = s;
  r.bargain = analyze_bargain(s);
  r.filing = filing_viability(s);
  r.decomposition = decompose(s);
  r.regime = classify_regime(r.decomposition);
  r.evp = evp(s);
  r.quote = fair_bargain(s);

  auto& w = r.warnings;
  if (r.quote.settlement_at_offer) {
    w.push_back("settlement-at-offer: q_settle = 1, the offer settles at the first node");
  }
  if (r.bargain.evt < 0.0) {
    w.push_back("negative-trial-value: expected value of trial is below zero");
  }
  if (r.bargain.coop_surplus < 0.0) {
    w.push_back("negative-surplus: settlement already dominates the noncooperative position");
  }
  if (r.bargain.reasonable_bargain <= 0.0) {
    w.push_back("no-reasonable-bargain: transaction costs consume the expected benefit");
  }
  if (!r.filing.viable) {
    w.push_back("filing-not-viable: threat value is below the filing cost");
  }
  if (r.quote.unpriceable) {
    w.push_back(std::string("unpriceable: ") + to_string(*r.quote.unpriceable));
  }
  return r;
}

ordered_json report_to_json(const AnalysisReport& r) {
  ordered_json j = ordered_json::object();
  j["currency"] = r.scenario.currency;
  j["scenario"] = scenario_to_json(r.scenario);
  j["bargain"] = bargain_json(r, round_display);
  j["decomposition"] = decomposition_json(r, round_display);
  j["evp"] = round_display(r.evp);
  j["quote"] = quote_json(r.quote, round_display);
  j["warnings"] = r.warnings;
  ordered_json exact = ordered_json::object();
  exact["bargain"] = bargain_json(r, identity);
  exact["decomposition"] = decomposition_json(r, identity);
  exact["evp"] = r.evp;
  exact["quote"] = quote_json(r.quote, identity);
  j["_exact"] = std::move(exact);
  return j;
}

std::string to_canonical_json(const AnalysisReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& b = r.bargain;
  const auto& q = r.quote;
  out << "Dispute analysis (" << r.scenario.currency << ")\n";
  out << "Backward induction\n";
  line(out, "Expected value of appeal (EVA)", money(b.eva));
  line(out, "Expected value of trial (EVT)", money(b.evt));
  line(out, "Expected value of bargain (EVB)", money(b.evb));
  line(out, "Expected value of claim (EVC)", money(b.evc));
  line(out, "Threat value (TP)", money(b.threat_value));
  line(out, "Filing viable (TP >= FC)", b.filing_viable ? "yes" : "no");
  out << "Bargain positions\n";
  line(out, "Noncooperative bargain (B_N)", money(b.noncoop_bargain));
  line(out, "Cooperative bargain (B_C)", money(b.coop_bargain));
  line(out, "Cooperative surplus (B_N - B_C)", money(b.coop_surplus));
  line(out, "Reasonable bargain (R_B)", money(b.reasonable_bargain));
  out << "Transaction costs\n";
  line(out, "Expected benefit (P_C)", money(r.decomposition.pc));
  line(out, "Transaction cost (L_C)", money(r.decomposition.lc));
  line(out, "Regime", to_string(r.regime));
  out << "Fair bargain\n";
  line(out, "Expected litigation payoff (EVP)", money(r.evp));
  if (q.priced()) {
    line(out, "d1", fixed(*q.d1, 5));
    line(out, "d2", fixed(*q.d2, 5));
    line(out, "N(d1)", fixed(*q.n_d1, 4));
    line(out, "N(d2)", fixed(*q.n_d2, 4));
    line(out, "Claim value (Q)", money(*q.claim_value));
    line(out, "Fair bargain (F_B)", money(*q.fair_bargain));
    line(out, "Cooperation feasible from",
         money(q.feasible_band->lo) + " to " + money(q.feasible_band->hi));
  } else {
    line(out, "Unpriceable", to_string(*q.unpriceable));
  }
  if (!r.warnings.empty()) {
    out << "Warnings\n";
    for (const auto& w : r.warnings) out << "  - " << w << "\n";
  }
  return out.str();
}

std::string to_csv(const AnalysisReport& r) {
  auto num = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  auto opt = [&](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
  const auto& b = r.bargain;
  const auto& q = r.quote;
  std::ostringstream out;
  out << "currency,eva,evt,evb,evc,threat_value,noncoop_bargain,coop_bargain,"
         "coop_surplus,reasonable_bargain,pc,lc,regime,evp,d1,d2,n_d1,n_d2,"
         "claim_value,fair_bargain\n";
  out << r.scenario.currency << ',' << num(b.eva) << ',' << num(b.evt) << ','
      << num(b.evb) << ',' << num(b.evc) << ',' << num(b.threat_value) << ','
      << num(b.noncoop_bargain) << ',' << num(b.coop_bargain) << ','
      << num(b.coop_surplus) << ',' << num(b.reasonable_bargain) << ','
      << num(r.decomposition.pc) << ',' << num(r.decomposition.lc) << ','
      << to_string(r.regime) << ',' << num(r.evp) << ',' << opt(q.d1) << ','
      << opt(q.d2) << ',' << opt(q.n_d1) << ',' << opt(q.n_d2) << ','
      << opt(q.claim_value) << ',' << opt(q.fair_bargain) << '\n';
  return out.str();
}

TerminalRule parse_terminal_rule(std::string_view name) {
  if (name == "forced-trial" || name == "FORCED_TRIAL") return TerminalRule::kForcedTrial;
  if (name == "abandon" || name == "ABANDON") return TerminalRule::kAbandon;
  throw ValidationError("terminal", "must be forced-trial or abandon");
}

SimulationResult run_simulation(const DisputeScenario& s,
                                const SimulationOptions& opts) {
  validate(s);
  SimulationResult r;
  r.config = chain_config_for(s);
  if (opts.trials) r.config.trials = *opts.trials;
  if (opts.seed) r.config.seed = *opts.seed;
  if (opts.max_rounds) r.config.max_rounds = *opts.max_rounds;
  if (opts.terminal_rule) r.config.terminal_rule = *opts.terminal_rule;
  if (opts.workers) r.config.workers = *opts.workers;
  r.estimate = simulate_chain(r.config);
  return r;
}

ordered_json simulation_to_json(const SimulationResult& r) {
  const auto& e = r.estimate;
  ordered_json j = ordered_json::object();
  j["p_win"] = r.config.p_win;
  j["q_settle"] = r.config.q_settle;
  j["winning_benefit"] = r.config.winning_benefit;
  j["max_rounds"] = r.config.max_rounds;
  j["terminal_rule"] = to_string(r.config.terminal_rule);
  j["trials"] = e.trials;
  j["seed"] = e.seed;
  j["workers"] = e.workers;
  j["closed_form"] = e.closed_form;
  j["truncated"] = e.truncated;
  j["monte_carlo_mean"] = e.monte_carlo_mean;
  j["monte_carlo_stderr"] = e.monte_carlo_stderr;
  j["rounds_histogram"] = e.rounds_histogram;
  return j;
}

OptimalCostReport optimal_cost_report(const DisputeScenario& s,
                                      std::optional<double> k,
                                      std::optional<double> tol) {
  validate(s);
  OptimalCostReport r;
  r.decomposition = decompose(s);
  const double pc = r.decomposition.pc;
  if (!(pc > 0.0)) {
    r.warnings.push_back("degenerate-budget: P_C <= 0, no transaction cost to optimize");
    return r;
  }
  r.k = k.value_or(1.0 / pc);
  r.tol = tol.value_or(1e-6 * pc);
  r.optimum = optimal_lc(s, UtilitySpec::deterrence_weighted(*r.k), *r.tol);
  try {
    r.split_fixed_admin = cost_split(r.optimum->lc_star, FixedAdmin{s.admin_cost});
  } catch (const InfeasibleSplit&) {
    r.warnings.push_back("infeasible-split: admin_cost alone exceeds the optimal budget");
  }
  try {
    r.split_fixed_bargain = cost_split(r.optimum->lc_star, FixedBargain{s.bargain_cost});
  } catch (const InfeasibleSplit&) {
    r.warnings.push_back("infeasible-split: bargain_cost alone exceeds the optimal budget");
  }
  return r;
}

ordered_json optimal_cost_to_json(const OptimalCostReport& r) {
  auto split = [](const std::optional<CostSplit>& c) {
    if (!c) return ordered_json(nullptr);
    ordered_json j = ordered_json::object();
    j["admin_cost"] = c->ca;
    j["bargain_cost"] = c->cb;
    return j;
  };
  ordered_json j = ordered_json::object();
  j["pc"] = r.decomposition.pc;
  j["lc"] = r.decomposition.lc;
  j["rb"] = r.decomposition.rb;
  j["utility"] = "deterrence_weighted";
  j["k"] = optional_number(r.k, identity);
  j["tol"] = optional_number(r.tol, identity);
  if (r.optimum) {
    j["lc_star"] = r.optimum->lc_star;
    j["rb_star"] = r.optimum->rb_star;
    j["utility_star"] = r.optimum->utility_star;
  } else {
    j["lc_star"] = nullptr;
    j["rb_star"] = nullptr;
    j["utility_star"] = nullptr;
  }
  j["split_fixed_admin"] = split(r.split_fixed_admin);
  j["split_fixed_bargain"] = split(r.split_fixed_bargain);
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace litiquant

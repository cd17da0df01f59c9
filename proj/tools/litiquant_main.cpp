// litiquant: settlement bargaining analysis from the command line.
//
// Exit codes: 0 success, 1 parse / validation error, 2 runtime error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "litiquant/errors.hpp"
#include "litiquant/report.hpp"
#include "litiquant/scenario_io.hpp"
#include "litiquant/server.hpp"
#include "litiquant/sweep.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitRuntime = 2;

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v != nullptr && *v != '\0' ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace litiquant;

  CLI::App app{"Settlement bargaining analysis: reasonable and fair bargains"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string format = "json";
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of one scenario");
  analyze_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  analyze_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  std::string param;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 0;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Vary one parameter over a grid");
  sweep_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  sweep_cmd->add_option("--param", param, "Parameter to sweep")->required();
  sweep_cmd->add_option("--from", from, "Grid start")->required();
  sweep_cmd->add_option("--to", to, "Grid end")->required();
  sweep_cmd->add_option("--steps", steps, "Number of grid points (>= 2)")->required();
  sweep_cmd->add_option("--out", out_path, "Write CSV here instead of stdout");

  SimulationOptions sim;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint32_t max_rounds = 0;
  unsigned workers = 0;
  std::string terminal = "forced-trial";
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo of the renegotiation chain");
  sim_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  sim_cmd->add_option("--trials", trials, "Number of walks")->required();
  sim_cmd->add_option("--seed", seed, "64-bit seed")->required();
  sim_cmd->add_option("--max-rounds", max_rounds, "Last renegotiation node N")->required();
  sim_cmd->add_option("--terminal", terminal, "Rule past node N")
      ->check(CLI::IsMember({"forced-trial", "abandon"}));
  auto* workers_opt = sim_cmd->add_option("--workers", workers, "Threads (0 = all cores)");

  std::optional<double> k;
  std::optional<double> tol;
  auto* opt_cmd = app.add_subcommand("optimal-cost", "Utility-optimal transaction cost");
  opt_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  opt_cmd->add_option("--k", k, "Deterrence rate (default 1/P_C)");
  opt_cmd->add_option("--tol", tol, "Absolute tolerance on L_C* (default 1e-6 P_C)");

  ServiceConfig service;
  int port = std::atoi(env_or("LITIQUANT_PORT", "8080").c_str());
  std::string static_dir;
  std::string store_dir = env_or("LITIQUANT_STORE_DIR", "scenario-store");
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--port", port, "TCP port (env LITIQUANT_PORT)");
  serve_cmd->add_option("--static-dir", static_dir, "UI assets served at /");
  serve_cmd->add_option("--store-dir", store_dir, "Named scenario store (env LITIQUANT_STORE_DIR)");
  serve_cmd->add_option("--host", service.host, "Bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze_cmd) {
      const AnalysisReport report = analyze(load_scenario_file(scenario_path));
      if (format == "text") {
        std::cout << to_text(report);
      } else if (format == "csv") {
        std::cout << to_csv(report);
      } else {
        std::cout << to_canonical_json(report);
      }
    } else if (*sweep_cmd) {
      const SweepSeries series = sweep(load_scenario_file(scenario_path), param, from, to, steps);
      const std::string csv = sweep_to_csv(series);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out || !(out << csv)) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return kExitRuntime;
        }
      }
    } else if (*sim_cmd) {
      sim.trials = trials;
      sim.seed = seed;
      sim.max_rounds = max_rounds;
      sim.terminal_rule = parse_terminal_rule(terminal);
      if (workers_opt->count() > 0) sim.workers = workers;
      const SimulationResult r = run_simulation(load_scenario_file(scenario_path), sim);
      std::cout << simulation_to_json(r).dump(2) << "\n";
    } else if (*opt_cmd) {
      const auto report = optimal_cost_report(load_scenario_file(scenario_path), k, tol);
      std::cout << optimal_cost_to_json(report).dump(2) << "\n";
    } else if (*serve_cmd) {
      service.port = port;
      service.store_dir = store_dir;
      if (!static_dir.empty()) service.static_dir = static_dir;
      HttpService http(service);
      const int bound = http.bind();
      std::cerr << "litiquant listening on " << service.host << ":" << bound << "\n";
      http.run();
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidSweep& e) {
    std::cerr << "invalid sweep: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "litiquant/report.hpp"

namespace litiquant {

struct SweepRow {
  double value = 0.0;
  double evc = 0.0;
  double threat_value = 0.0;
  double noncoop_bargain = 0.0;
  double coop_bargain = 0.0;
  double reasonable_bargain = 0.0;
  double evp = 0.0;
  std::optional<double> claim_value;   // empty when unpriced
  std::optional<double> fair_bargain;  // empty when unpriced
};

struct SweepSeries {
  std::string swept_param;
  std::vector<double> grid;
  std::vector<SweepRow> rows;
};

// Names accepted by sweep().
const std::vector<std::string>& sweepable_params();

inline constexpr std::size_t kMaxSweepSteps = 100000;

// Runs analyze() at `steps` evenly spaced values of `param` over [lo, hi].
// Throws InvalidSweep for an unknown parameter, lo >= hi, steps < 2, or a
// grid point outside the parameter's valid domain.
SweepSeries sweep(const DisputeScenario& s, std::string_view param, double lo,
                  double hi, std::size_t steps);

std::string sweep_to_csv(const SweepSeries& series);
ordered_json sweep_to_json(const SweepSeries& series);

}  // namespace litiquant

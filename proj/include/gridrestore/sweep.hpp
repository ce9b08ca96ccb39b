// Copyright 2026 The gridrestore Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRIDRESTORE_SWEEP_HPP_
#define GRIDRESTORE_SWEEP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridrestore/feeders.hpp"
#include "gridrestore/metrics.hpp"
#include "gridrestore/solve.hpp"

namespace gridrestore {

// Trial grid over mean repair time x budget x crew count x travel setting.
// Travel is either a list of speeds (ft/min) or a list of mean repair to
// mean travel ratios; a ratio fixes the speed from the cell's mean repair
// time and the feeder's mean site distance.
struct SweepSpec {
  FeederData feeder;
  std::vector<std::pair<BusId, BusId>> damaged;  // empty: every line
  std::vector<double> means;
  std::vector<double> budgets;
  std::vector<std::size_t> crews;
  std::vector<double> speeds;
  std::vector<double> ratios;
  double shape = 2.0;
  double floor = 30.0;
  double reward = 1.0;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  SolverOptions options{Objective::kReward, HomeDegree::kRelaxed, true, true, std::size_t{1} << 20};
  SearchLimits limits;
  std::size_t threads = 0;  // 0: hardware concurrency
  bool timing = false;      // write elapsed seconds instead of 0
};

SweepSpec load_sweep(const std::string& path);
SweepSpec parse_sweep(const std::string& text, const std::string& origin = "<memory>",
                      const std::string& base_dir = ".");

// One row per (cell, trial), ordered by mean, budget, crews, travel, trial.
// Repair vectors depend only on (seed, mean index, trial), so every budget,
// crew count and speed sees the same draws. Output does not depend on the
// thread count unless `timing` is set.
std::vector<MetricRow> run_sweep(const SweepSpec& spec);

}  // namespace gridrestore

#endif  // GRIDRESTORE_SWEEP_HPP_

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

#ifndef GRIDRESTORE_HORIZON_HPP_
#define GRIDRESTORE_HORIZON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridrestore/network.hpp"
#include "gridrestore/solve.hpp"

namespace gridrestore {

struct Arrival {
  std::size_t window = 0;  // first window that may plan the job
  BusId from = 0;
  BusId to = 0;
  double repair_min = 0.0;  // planner's estimate
  double reward = 1.0;
  double penalty = 0.0;
  std::optional<double> actual_min;  // true duration when it differs
};

struct WindowSpec {
  double length_min = 0.0;
  std::vector<double> budgets;  // one per crew on duty
};

struct Scenario {
  DistributionNetwork network;
  TransportGraph transport;
  std::vector<BusId> energized;  // initial energized region; {source} if empty
  double speed = 1.0;            // ft/min
  std::vector<WindowSpec> windows;
  std::vector<Arrival> arrivals;
  SolverOptions options;
  SearchLimits limits;
  std::uint64_t seed = 1;
};

// Throws Error(kInvalidArgument) for arrivals on unknown or energized lines,
// repeated arrivals, out-of-range windows, non-positive times, and
// Error(kUnreachable) when a job site cannot be reached.
void validate_scenario(const Scenario& scenario);

// JSON scenario; see README for the schema. Relative feeder paths resolve
// against the scenario file's directory.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& text, const std::string& origin = "<memory>",
                        const std::string& base_dir = ".");

struct PendingJob {
  std::size_t line = 0;
  double estimate = 0.0;  // residual minutes the planner sees
  double actual = 0.0;    // residual minutes the work really takes
  double reward = 1.0;
  double penalty = 0.0;
  bool repaired = false;  // done, awaiting a live upstream path
};

struct RestorationState {
  std::size_t window = 0;
  std::vector<BusId> energized;  // sorted
  std::vector<PendingJob> pending;
  std::vector<std::size_t> repaired_lines;  // every line repaired so far, sorted
  double cumulative_reward = 0.0;
};

RestorationState initial_state(const Scenario& scenario);

struct ExecutedJob {
  std::size_t crew = 0;
  std::size_t line = 0;
  double start = 0.0;
  double end = 0.0;
  bool completed = false;
  double residual = 0.0;  // actual minutes left when not completed
};

struct WindowResult {
  std::size_t window = 0;
  bool trivial = false;  // nothing to plan
  Solution plan;
  std::vector<std::vector<std::size_t>> planned_lines;  // per crew, in order
  std::vector<ExecutedJob> executed;
  std::vector<std::size_t> completed;  // lines
  std::vector<std::size_t> energized;  // lines
  std::vector<PendingJob> carried;
  std::vector<BusId> energized_buses;  // S at window end, sorted
  double reward = 0.0;
};

// Throws Error(kInfeasible) naming the window when no schedule is found.
WindowResult run_window(const RestorationState& state, const Scenario& scenario);

RestorationState advance(const RestorationState& state, const WindowResult& result,
                         const Scenario& scenario);

struct Timeline {
  std::vector<WindowResult> windows;
  std::vector<double> cumulative_reward;  // after each window
};

// Stops after the last window, or earlier once nothing is pending and no
// arrivals remain.
Timeline simulate(const Scenario& scenario);

// window,event,crew,from,to,start_min,end_min,residual_min,reward,cumulative_reward
std::string timeline_csv(const Scenario& scenario, const Timeline& timeline);

}  // namespace gridrestore

#endif  // GRIDRESTORE_HORIZON_HPP_

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

#ifndef GRIDRESTORE_SOLVE_HPP_
#define GRIDRESTORE_SOLVE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gridrestore/problem.hpp"
#include "gridrestore/transform.hpp"

namespace gridrestore {

enum class ScheduleViolationKind { kBudget, kDuplicate, kContinuity };

struct ScheduleViolation {
  ScheduleViolationKind kind;
  std::size_t crew = 0;  // crew that holds the offending job
  NodeIndex job = 0;
  std::string detail;
};

struct ScheduleReport {
  std::vector<ScheduleViolation> violations;  // at most one per kind
  std::vector<double> spent;                  // per crew
  double aggregate_reward = 0.0;

  bool ok() const { return violations.empty(); }
  bool has(ScheduleViolationKind kind) const;
};

// Throws Error(kInvalidArgument) for unknown job ids or a crew count mismatch.
ScheduleReport check_schedule(const WorkingGraph& gw, const PrecedenceDag& gwd,
                              const CrewSpec& crews, const Schedule& schedule);

enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kLimit };

const char* to_string(SolveStatus status);

struct SolverOptions {
  Objective objective = Objective::kReward;
  // kDummyNode behaves like kRelaxed here; the parking node only exists in
  // the MILP image.
  HomeDegree home_degree = HomeDegree::kStrict;
  bool symmetry_breaking = true;
  bool memoize = true;
  std::size_t memo_capacity = std::size_t{1} << 20;
};

struct SearchLimits {
  double time_limit_s = std::numeric_limits<double>::infinity();
  std::uint64_t node_limit = 0;  // 0: unlimited
  double abs_gap = 0.0;
  double rel_gap = 0.0;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double elapsed_s = 0.0;
};

struct Solution {
  Schedule schedule;
  // Objective of `schedule`; -inf (and LB = -inf) when none was found.
  double objective = -std::numeric_limits<double>::infinity();
  double aggregate_reward = 0.0;
  double lb = -std::numeric_limits<double>::infinity();
  double ub = std::numeric_limits<double>::infinity();
  SolveStatus status = SolveStatus::kLimit;
  std::vector<double> spent;
  SolveStats stats;

  bool has_schedule() const { return lb > -std::numeric_limits<double>::infinity(); }
  double gap() const { return ub - lb; }
};

// Exhaustive oracle for small instances. Throws Error(kTooLarge) above
// `max_jobs` damaged nodes.
Solution solve_bruteforce(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                          const SolverOptions& options, std::size_t max_jobs = 10);

// Depth-first branch and bound. Instances are limited to 255 jobs
// (Error(kTooLarge)).
Solution solve_exact(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                     const SolverOptions& options, const SearchLimits& limits = {});

// A search position: tours of crews [0, closed.size()) are final and
// `open` is the partial tour of the next crew.
struct PartialSchedule {
  std::vector<std::vector<NodeIndex>> closed;
  std::vector<NodeIndex> open;
};

// Upper bound the search uses at `partial`, in objective units; -inf when no
// completion can satisfy continuity. Exposed for testing.
double completion_bound(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                        const SolverOptions& options, const PartialSchedule& partial);

}  // namespace gridrestore

#endif  // GRIDRESTORE_SOLVE_HPP_

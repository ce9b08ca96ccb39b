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

// Types shared by the model builder and the exact solver.

#ifndef GRIDRESTORE_PROBLEM_HPP_
#define GRIDRESTORE_PROBLEM_HPP_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "gridrestore/transform.hpp"

namespace gridrestore {

// Per-crew time budgets for one restoration window.
class CrewSpec {
 public:
  CrewSpec() = default;
  // Throws Error(kInvalidArgument) unless there is at least one crew and all
  // budgets and the window length are positive.
  CrewSpec(std::vector<double> budgets,
           double window = std::numeric_limits<double>::infinity());

  static CrewSpec uniform(std::size_t crews, double budget,
                          double window = std::numeric_limits<double>::infinity());

  std::size_t size() const { return budgets_.size(); }
  const std::vector<double>& budgets() const { return budgets_; }
  double window() const { return window_; }
  // min(T_c, window length)
  double effective_budget(std::size_t crew) const;

 private:
  std::vector<double> budgets_;
  double window_ = std::numeric_limits<double>::infinity();
};

enum class Objective { kReward, kProfit };

// How the home node's degree constraint is written. kStrict forces every crew
// to leave home; kRelaxed turns the home row into an inequality; kDummyNode
// appends a zero-cost parking node any crew may visit.
enum class HomeDegree { kStrict, kRelaxed, kDummyNode };

struct ModelOptions {
  Objective objective = Objective::kReward;
  HomeDegree home_degree = HomeDegree::kStrict;
  bool valid_inequalities = false;
  bool skip_root_precedence = true;
};

// Ordered job lists, one per crew. Root legs are implicit and free.
struct Schedule {
  std::vector<std::vector<NodeIndex>> tours;

  std::size_t job_count() const;
};

// Repair time of every job plus travel between consecutive jobs.
double tour_time(const WorkingGraph& gw, const std::vector<NodeIndex>& tour);

// Σ r_i over scheduled jobs.
double aggregate_reward(const WorkingGraph& gw, const Schedule& schedule);

// Objective value of a schedule under `objective`, including the constant
// penalty offset of the profit form.
double objective_value(const WorkingGraph& gw, const Schedule& schedule, Objective objective,
                       std::size_t crews);

const char* to_string(Objective objective);
const char* to_string(HomeDegree mode);
Objective parse_objective(const std::string& text);
HomeDegree parse_home_degree(const std::string& text);

}  // namespace gridrestore

#endif  // GRIDRESTORE_PROBLEM_HPP_

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

#include "gridrestore/problem.hpp"

#include <cmath>

#include "gridrestore/error.hpp"

namespace gridrestore {

CrewSpec::CrewSpec(std::vector<double> budgets, double window)
    : budgets_(std::move(budgets)), window_(window) {
  if (budgets_.empty()) throw Error(ErrorCode::kInvalidArgument, "at least one crew is required");
  for (double b : budgets_)
    if (!(b > 0.0) || std::isnan(b))
      throw Error(ErrorCode::kInvalidArgument, "crew budgets must be positive");
  if (!(window_ > 0.0)) throw Error(ErrorCode::kInvalidArgument, "window length must be positive");
}

CrewSpec CrewSpec::uniform(std::size_t crews, double budget, double window) {
  return CrewSpec(std::vector<double>(crews, budget), window);
}

double CrewSpec::effective_budget(std::size_t crew) const {
  return std::min(budgets_.at(crew), window_);
}

std::size_t Schedule::job_count() const {
  std::size_t n = 0;
  for (const auto& t : tours) n += t.size();
  return n;
}

double tour_time(const WorkingGraph& gw, const std::vector<NodeIndex>& tour) {
  double t = 0.0;
  for (std::size_t k = 0; k < tour.size(); ++k) {
    t += gw.repair(tour[k]);
    if (k > 0) t += gw.travel(tour[k - 1], tour[k]);
  }
  return t;
}

double aggregate_reward(const WorkingGraph& gw, const Schedule& schedule) {
  double r = 0.0;
  for (const auto& tour : schedule.tours)
    for (NodeIndex j : tour) r += gw.reward(j);
  return r;
}

double objective_value(const WorkingGraph& gw, const Schedule& schedule, Objective objective,
                       std::size_t crews) {
  if (objective == Objective::kReward) return aggregate_reward(gw, schedule);
  // Σ r_i Σ_c y_ic − Σ p_i Σ_c (1 − y_ic)
  double value = 0.0;
  for (std::size_t i = 1; i < gw.size(); ++i) value -= gw.penalty(i) * static_cast<double>(crews);
  for (const auto& tour : schedule.tours)
    for (NodeIndex j : tour) value += gw.reward(j) + gw.penalty(j);
  return value;
}

const char* to_string(Objective objective) {
  return objective == Objective::kReward ? "reward" : "profit";
}

const char* to_string(HomeDegree mode) {
  switch (mode) {
    case HomeDegree::kStrict: return "strict";
    case HomeDegree::kRelaxed: return "relaxed";
    case HomeDegree::kDummyNode: return "dummy";
  }
  return "strict";
}

Objective parse_objective(const std::string& text) {
  if (text == "reward") return Objective::kReward;
  if (text == "profit") return Objective::kProfit;
  throw Error(ErrorCode::kInvalidArgument, "unknown objective '" + text + "'");
}

HomeDegree parse_home_degree(const std::string& text) {
  if (text == "strict") return HomeDegree::kStrict;
  if (text == "relaxed") return HomeDegree::kRelaxed;
  if (text == "dummy" || text == "dummy_node") return HomeDegree::kDummyNode;
  throw Error(ErrorCode::kInvalidArgument, "unknown home-degree mode '" + text + "'");
}

}  // namespace gridrestore

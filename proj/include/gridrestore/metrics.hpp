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

#ifndef GRIDRESTORE_METRICS_HPP_
#define GRIDRESTORE_METRICS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "gridrestore/problem.hpp"

namespace gridrestore {

// AR / ((n - 1) m), n counting the root.
double nar_per_crew(double aggregate_reward, std::size_t n, std::size_t m);

// AR(m + 1) - AR(m) for consecutive entries. Throws on fewer than two.
std::vector<double> marginal_aggregate_reward(const std::vector<double>& ar_by_m);

// Σ (B_c - spent_c) / Σ B_c with B_c the effective budgets.
double nuwt(const std::vector<double>& spent, const CrewSpec& crews);
double nuwt(const WorkingGraph& gw, const Schedule& schedule, const CrewSpec& crews);

struct MetricRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  double mean_repair = 0.0;
  double mean_travel = 0.0;
  double budget = 0.0;
  double ar = 0.0;
  double nar = 0.0;
  double nar_per_crew = 0.0;
  double nuwt = 0.0;
  double lb = 0.0;
  double ub = 0.0;
  double gap = 0.0;
  std::string status;
  double elapsed_s = 0.0;
};

std::string csv_header();
std::string csv_line(const MetricRow& row);
std::string csv_text(const std::vector<MetricRow>& rows);
// Error(kIo) if the file cannot be written.
void emit_csv(const std::vector<MetricRow>& rows, const std::string& path);

// Fixed six-digit decimal; non-finite values print as inf, -inf or nan.
std::string format_fixed(double value);

}  // namespace gridrestore

#endif  // GRIDRESTORE_METRICS_HPP_

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

#include "gridrestore/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "gridrestore/error.hpp"

namespace gridrestore {

double nar_per_crew(double aggregate_reward, std::size_t n, std::size_t m) {
  if (n < 2 || m < 1) throw Error(ErrorCode::kInvalidArgument, "NAR needs n >= 2 and m >= 1");
  return aggregate_reward / (static_cast<double>(n - 1) * static_cast<double>(m));
}

std::vector<double> marginal_aggregate_reward(const std::vector<double>& ar_by_m) {
  if (ar_by_m.size() < 2) throw Error(ErrorCode::kInvalidArgument, "MAR needs at least two crew counts");
  std::vector<double> out;
  for (std::size_t i = 1; i < ar_by_m.size(); ++i) out.push_back(ar_by_m[i] - ar_by_m[i - 1]);
  return out;
}

double nuwt(const std::vector<double>& spent, const CrewSpec& crews) {
  if (spent.size() != crews.size()) throw Error(ErrorCode::kInvalidArgument, "one spent time per crew expected");
  double unused = 0.0;
  double total = 0.0;
  for (std::size_t c = 0; c < spent.size(); ++c) {
    const double b = crews.effective_budget(c);
    unused += b - spent[c];
    total += b;
  }
  return unused / total;
}

double nuwt(const WorkingGraph& gw, const Schedule& schedule, const CrewSpec& crews) {
  std::vector<double> spent;
  for (const auto& tour : schedule.tours) spent.push_back(tour_time(gw, tour));
  return nuwt(spent, crews);
}

std::string format_fixed(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value == 0.0 ? 0.0 : value);
  return buf;
}

std::string csv_header() {
  return "instance,n,m,mean_repair,mean_travel,budget,ar,nar,nar_per_crew,nuwt,lb,ub,gap,status,elapsed_s";
}

std::string csv_line(const MetricRow& r) {
  std::string s = r.instance;
  s += "," + std::to_string(r.n) + "," + std::to_string(r.m);
  for (double v : {r.mean_repair, r.mean_travel, r.budget, r.ar, r.nar, r.nar_per_crew, r.nuwt, r.lb, r.ub, r.gap})
    s += "," + format_fixed(v);
  s += "," + r.status + "," + format_fixed(r.elapsed_s);
  return s;
}

std::string csv_text(const std::vector<MetricRow>& rows) {
  std::string s = csv_header() + "\n";
  for (const MetricRow& r : rows) s += csv_line(r) + "\n";
  return s;
}

void emit_csv(const std::vector<MetricRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << csv_text(rows);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
}

}  // namespace gridrestore

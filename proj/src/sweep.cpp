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

#include "gridrestore/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "gridrestore/error.hpp"
#include "gridrestore/transform.hpp"
#include "json_support.hpp"

namespace gridrestore {
namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct Cell {
  std::size_t mean_index;
  std::size_t budget_index;
  std::size_t crew_index;
  std::size_t travel_index;
  std::size_t trial;
};

MetricRow run_cell(const SweepSpec& spec, const Cell& cell, double mean_site_ft) {
  const double mean = spec.means[cell.mean_index];
  const double budget = spec.budgets[cell.budget_index];
  const std::size_t m = spec.crews[cell.crew_index];
  const double speed = spec.speeds.empty() ? spec.ratios[cell.travel_index] * mean_site_ft / mean
                                           : spec.speeds[cell.travel_index];

  MetricRow row;
  row.instance = (spec.feeder.name.empty() ? std::string("feeder") : spec.feeder.name) +
                 "/mean=" + short_number(mean) + "/budget=" + short_number(budget) + "/m=" + std::to_string(m) +
                 (spec.speeds.empty() ? "/ratio=" + short_number(spec.ratios[cell.travel_index]) : "") +
                 "/speed=" + short_number(speed) + "/trial=" + std::to_string(cell.trial);
  row.m = m;
  row.budget = budget;
  try {
    DamagePlan plan;
    plan.lines = spec.damaged;
    plan.shape = spec.shape;
    plan.mean = mean;
    plan.floor = spec.floor;
    SplitMix64 rng = SplitMix64::derive(spec.seed, {cell.mean_index, cell.trial});
    const RepairSample sample = sample_repair_times(spec.feeder.network, plan, rng);
    const DistributionNetwork net = apply_damage(spec.feeder.network, sample, spec.reward);
    const WorkingGraphs wg = build_working_graphs(net, spec.feeder.transport, spec.feeder.energized, speed);
    row.n = wg.graph.size();
    row.mean_repair = sample.achieved_mean;
    row.mean_travel = mean_site_ft / speed;

    const CrewSpec crews = CrewSpec::uniform(m, budget);
    const Solution sol = solve_exact(wg.graph, wg.precedence, crews, spec.options, spec.limits);
    row.status = to_string(sol.status);
    row.lb = sol.lb;
    row.ub = sol.ub;
    row.gap = sol.has_schedule() ? sol.gap() : sol.ub - sol.lb;
    if (sol.has_schedule()) {
      row.ar = sol.aggregate_reward;
      row.nar = row.ar / static_cast<double>(row.n - 1);
      row.nar_per_crew = nar_per_crew(row.ar, row.n, m);
      row.nuwt = nuwt(sol.spent, crews);
    } else {
      row.nuwt = 1.0;
    }
    if (spec.timing) row.elapsed_s = sol.stats.elapsed_s;
  } catch (const Error& e) {
    row.status = "error";
    std::fprintf(stderr, "%s: %s\n", row.instance.c_str(), e.what());
  }
  return row;
}

}  // namespace

SweepSpec parse_sweep(const std::string& text, const std::string& origin, const std::string& base_dir) {
  using detail::json;
  const json doc = detail::parse_json(text, origin);
  if (!doc.is_object()) detail::schema_error(origin, "expected a JSON object");
  SweepSpec spec;
  try {
    if (doc.contains("network")) {
      spec.feeder = detail::feeder_from_json(doc["network"], origin);
    } else if (doc.contains("feeder")) {
      std::filesystem::path p = doc["feeder"].get<std::string>();
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      spec.feeder = load_feeder(p.string());
    } else {
      detail::schema_error(origin, "needs 'feeder' or 'network'");
    }
    spec.means = doc.at("means").get<std::vector<double>>();
    spec.budgets = doc.at("budgets").get<std::vector<double>>();
    spec.crews = doc.at("crews").get<std::vector<std::size_t>>();
    if (doc.contains("speeds")) spec.speeds = doc["speeds"].get<std::vector<double>>();
    if (doc.contains("ratios")) spec.ratios = doc["ratios"].get<std::vector<double>>();
    if (doc.contains("damaged"))
      for (const json& d : doc["damaged"])
        spec.damaged.emplace_back(detail::bus_value(d.at(0), origin), detail::bus_value(d.at(1), origin));
    spec.shape = detail::number_field(doc, "shape", spec.shape, origin);
    spec.floor = detail::number_field(doc, "floor", spec.floor, origin);
    spec.reward = detail::number_field(doc, "reward", spec.reward, origin);
    spec.trials = doc.value("trials", std::size_t{1});
    spec.seed = doc.value("seed", std::uint64_t{1});
    spec.threads = doc.value("threads", std::size_t{0});
    spec.timing = doc.value("timing", false);
    if (doc.contains("options")) spec.options = detail::solver_options_from_json(doc["options"], origin);
    if (doc.contains("limits")) spec.limits = detail::limits_from_json(doc["limits"], origin);
  } catch (const json::exception& e) {
    detail::schema_error(origin, e.what());
  }
  if (spec.means.empty() || spec.budgets.empty() || spec.crews.empty())
    detail::schema_error(origin, "'means', 'budgets' and 'crews' must be non-empty");
  if (spec.speeds.empty() == spec.ratios.empty())
    detail::schema_error(origin, "give exactly one of 'speeds' or 'ratios'");
  return spec;
}

SweepSpec load_sweep(const std::string& path) {
  const std::filesystem::path p(path);
  return parse_sweep(detail::read_text(path), path, p.parent_path().empty() ? "." : p.parent_path().string());
}

std::vector<MetricRow> run_sweep(const SweepSpec& spec) {
  for (double m : spec.means)
    if (!(m > spec.floor)) throw Error(ErrorCode::kInvalidArgument, "every mean repair time must exceed the floor");
  for (double b : spec.budgets)
    if (!(b > 0.0)) throw Error(ErrorCode::kInvalidArgument, "budgets must be positive");
  for (std::size_t m : spec.crews)
    if (m == 0) throw Error(ErrorCode::kInvalidArgument, "crew counts must be positive");
  for (double v : spec.speeds.empty() ? spec.ratios : spec.speeds)
    if (!(v > 0.0)) throw Error(ErrorCode::kInvalidArgument, "speeds and ratios must be positive");

  const double mean_site_ft = travel_time_matrix(spec.feeder.network, spec.feeder.transport, 1.0).mean();
  const std::size_t travel_count = spec.speeds.empty() ? spec.ratios.size() : spec.speeds.size();
  std::vector<Cell> cells;
  for (std::size_t a = 0; a < spec.means.size(); ++a)
    for (std::size_t b = 0; b < spec.budgets.size(); ++b)
      for (std::size_t c = 0; c < spec.crews.size(); ++c)
        for (std::size_t d = 0; d < travel_count; ++d)
          for (std::size_t t = 0; t < spec.trials; ++t) cells.push_back({a, b, c, d, t});

  std::vector<MetricRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) rows[i] = run_cell(spec, cells[i], mean_site_ft);
  };
  std::size_t threads = spec.threads != 0 ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(cells.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace gridrestore

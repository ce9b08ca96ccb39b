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

#include "gridrestore.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "gridrestore/error.hpp"
#include "gridrestore/feeders.hpp"
#include "gridrestore/horizon.hpp"
#include "gridrestore/metrics.hpp"
#include "gridrestore/model.hpp"
#include "gridrestore/solve.hpp"
#include "gridrestore/sweep.hpp"
#include "gridrestore/transform.hpp"
#include "json.hpp"

using namespace gridrestore;
using ordered_json = nlohmann::ordered_json;

struct grr_network {
  FeederData data;
};

struct grr_problem {
  FeederData feeder;
  DistributionNetwork network;  // with damage applied
  std::optional<RepairSample> sample;
  double speed = 1.0;
  WorkingGraphs graphs;
  std::optional<CrewSpec> crews;
  ModelOptions model;
  bool symmetry_breaking = true;
};

struct grr_solution {
  Solution solution;
};

namespace {

thread_local std::string last_error;

grr_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return GRR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return GRR_PARSE;
    case ErrorCode::kIo: return GRR_IO;
    case ErrorCode::kTopology: return GRR_TOPOLOGY;
    case ErrorCode::kUnreachable: return GRR_UNREACHABLE;
    case ErrorCode::kTooLarge: return GRR_TOO_LARGE;
    case ErrorCode::kInfeasible: return GRR_INFEASIBLE;
  }
  return GRR_INTERNAL;
}

template <typename F>
grr_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return GRR_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return GRR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SolverOptions solver_options(const grr_problem& p) {
  SolverOptions o;
  o.objective = p.model.objective;
  o.home_degree = p.model.home_degree;
  o.symmetry_breaking = p.symmetry_breaking;
  return o;
}

ordered_json line_json(const DistributionNetwork& net, std::size_t line) {
  const Line& l = net.lines()[line];
  return ordered_json::array({l.from, l.to});
}

}  // namespace

extern "C" {

const char* grr_version(void) { return "1.0.0"; }

const char* grr_last_error(void) { return last_error.c_str(); }

void grr_string_free(char* s) { delete[] s; }

grr_status grr_network_load(const char* path, grr_network** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto net = std::make_unique<grr_network>();
    net->data = load_feeder(path);
    *out = net.release();
  });
}

void grr_network_free(grr_network* net) { delete net; }

size_t grr_network_line_count(const grr_network* net) { return net ? net->data.network.lines().size() : 0; }

int grr_network_is_annotated(const grr_network* net) { return net && net->data.annotated ? 1 : 0; }

grr_status grr_network_travel_range(const grr_network* net, double speed, double* min_out, double* max_out,
                                    double* mean_out) {
  return guarded([&] {
    require(net != nullptr, "null network");
    const TravelMatrix m = travel_time_matrix(net->data.network, net->data.transport, speed);
    if (min_out) *min_out = m.min();
    if (max_out) *max_out = m.max();
    if (mean_out) *mean_out = m.mean();
  });
}

void grr_damage_plan_init(grr_damage_plan* plan) {
  if (!plan) return;
  const DamagePlan d;
  plan->mean_repair = d.mean;
  plan->shape = d.shape;
  plan->floor = d.floor;
  plan->reward = d.reward;
  plan->seed = d.seed;
}

grr_status grr_problem_create(const grr_network* net, const grr_damage_plan* plan, double speed,
                              grr_problem** out) {
  return guarded([&] {
    require(net != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto p = std::make_unique<grr_problem>();
    p->feeder = net->data;
    p->speed = speed;
    if (plan) {
      DamagePlan d;
      d.mean = plan->mean_repair;
      d.shape = plan->shape;
      d.floor = plan->floor;
      d.reward = plan->reward;
      d.seed = plan->seed;
      // Start from an undamaged copy so file annotations do not leak in.
      std::vector<Line> lines = p->feeder.network.lines();
      for (Line& l : lines) l = Line{l.from, l.to, l.length_ft, false, 0.0, 0.0, 0.0};
      const DistributionNetwork clean(p->feeder.network.sources(), std::move(lines), p->feeder.network.buses());
      p->sample = sample_repair_times(clean, d);
      p->network = apply_damage(clean, *p->sample, d.reward);
    } else {
      p->network = p->feeder.network;
    }
    p->graphs = build_working_graphs(p->network, p->feeder.transport, p->feeder.energized, speed);
    if (p->graphs.graph.size() < 2) throw Error(ErrorCode::kInvalidArgument, "nothing to schedule");
    *out = p.release();
  });
}

void grr_problem_free(grr_problem* problem) { delete problem; }

size_t grr_problem_node_count(const grr_problem* problem) { return problem ? problem->graphs.graph.size() : 0; }

grr_status grr_problem_set_crews(grr_problem* problem, const double* budgets, size_t count, double window) {
  return guarded([&] {
    require(problem != nullptr && (budgets != nullptr || count == 0), "null argument");
    std::vector<double> b(budgets, budgets + count);
    problem->crews = CrewSpec(std::move(b), window > 0 ? window : std::numeric_limits<double>::infinity());
  });
}

void grr_options_init(grr_options* options) {
  if (!options) return;
  const ModelOptions m;
  options->objective = GRR_OBJECTIVE_REWARD;
  options->home_degree = GRR_MODE_STRICT;
  options->valid_inequalities = m.valid_inequalities ? 1 : 0;
  options->skip_root_precedence = m.skip_root_precedence ? 1 : 0;
  options->symmetry_breaking = 1;
}

grr_status grr_problem_set_options(grr_problem* problem, const grr_options* options) {
  return guarded([&] {
    require(problem != nullptr && options != nullptr, "null argument");
    require(options->objective == GRR_OBJECTIVE_REWARD || options->objective == GRR_OBJECTIVE_PROFIT,
            "unknown objective");
    require(options->home_degree >= GRR_MODE_STRICT && options->home_degree <= GRR_MODE_DUMMY,
            "unknown home-degree mode");
    problem->model.objective = options->objective == GRR_OBJECTIVE_PROFIT ? Objective::kProfit : Objective::kReward;
    problem->model.home_degree = static_cast<HomeDegree>(options->home_degree);
    problem->model.valid_inequalities = options->valid_inequalities != 0;
    problem->model.skip_root_precedence = options->skip_root_precedence != 0;
    problem->symmetry_breaking = options->symmetry_breaking != 0;
  });
}

grr_status grr_problem_dump_json(const grr_problem* problem, char** out) {
  return guarded([&] {
    require(problem != nullptr && out != nullptr, "null argument");
    const WorkingGraph& gw = problem->graphs.graph;
    ordered_json doc;
    doc["name"] = problem->feeder.name;
    doc["nodes"] = gw.size();
    doc["speed_ft_per_min"] = problem->speed;
    ordered_json jobs = ordered_json::array();
    for (std::size_t i = 1; i < gw.size(); ++i) {
      ordered_json j;
      j["node"] = i;
      j["line"] = line_json(problem->network, problem->graphs.jobs.line_of(static_cast<NodeIndex>(i)).line);
      j["repair_min"] = gw.repair(i);
      j["reward"] = gw.reward(i);
      j["penalty"] = gw.penalty(i);
      jobs.push_back(j);
    }
    doc["jobs"] = jobs;
    ordered_json travel = ordered_json::array();
    for (std::size_t i = 0; i < gw.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < gw.size(); ++j) row.push_back(gw.travel(i, j));
      travel.push_back(row);
    }
    doc["travel_min"] = travel;
    ordered_json arcs = ordered_json::array();
    for (const PrecedenceArc& a : problem->graphs.precedence.sorted_arcs())
      arcs.push_back(ordered_json::array({a.tail, a.head}));
    doc["precedence"] = arcs;
    ordered_json collapsed = ordered_json::array();
    for (std::size_t line : problem->graphs.collapsed_lines) collapsed.push_back(line_json(problem->network, line));
    doc["collapsed_lines"] = collapsed;
    *out = copy_string(doc.dump(2) + "\n");
  });
}

grr_status grr_problem_repair_csv(const grr_problem* problem, char** out) {
  return guarded([&] {
    require(problem != nullptr && out != nullptr, "null argument");
    require(problem->sample.has_value(), "repair times were not sampled for this problem");
    *out = copy_string(repair_samples_csv(problem->network, *problem->sample));
  });
}

grr_status grr_problem_export_model(const grr_problem* problem, int format, char** out) {
  return guarded([&] {
    require(problem != nullptr && out != nullptr, "null argument");
    require(problem->crews.has_value(), "crews are not set");
    require(format == GRR_FORMAT_MPS || format == GRR_FORMAT_LP, "unknown model format");
    const MilpInstance inst =
        assemble(problem->graphs.graph, problem->graphs.precedence, *problem->crews, problem->model);
    *out = copy_string(export_model(inst, format == GRR_FORMAT_MPS ? ModelFormat::kMps : ModelFormat::kLp));
  });
}

void grr_limits_init(grr_limits* limits) {
  if (!limits) return;
  limits->time_limit_s = 0.0;
  limits->node_limit = 0;
  limits->abs_gap = 0.0;
  limits->rel_gap = 0.0;
}

grr_status grr_solve(const grr_problem* problem, const grr_limits* limits, grr_solution** out) {
  return guarded([&] {
    require(problem != nullptr && out != nullptr, "null argument");
    require(problem->crews.has_value(), "crews are not set");
    *out = nullptr;
    SearchLimits l;
    if (limits) {
      if (limits->time_limit_s > 0) l.time_limit_s = limits->time_limit_s;
      l.node_limit = limits->node_limit;
      l.abs_gap = limits->abs_gap;
      l.rel_gap = limits->rel_gap;
    }
    auto sol = std::make_unique<grr_solution>();
    sol->solution =
        solve_exact(problem->graphs.graph, problem->graphs.precedence, *problem->crews, solver_options(*problem), l);
    *out = sol.release();
  });
}

void grr_solution_free(grr_solution* solution) { delete solution; }

int grr_solution_status(const grr_solution* s) {
  if (!s) return GRR_SOLVE_LIMIT;
  switch (s->solution.status) {
    case SolveStatus::kOptimal: return GRR_SOLVE_OPTIMAL;
    case SolveStatus::kFeasible: return GRR_SOLVE_FEASIBLE;
    case SolveStatus::kInfeasible: return GRR_SOLVE_INFEASIBLE;
    case SolveStatus::kLimit: return GRR_SOLVE_LIMIT;
  }
  return GRR_SOLVE_LIMIT;
}

int grr_solution_has_schedule(const grr_solution* s) { return s && s->solution.has_schedule() ? 1 : 0; }
double grr_solution_objective(const grr_solution* s) { return s ? s->solution.objective : NAN; }
double grr_solution_aggregate_reward(const grr_solution* s) { return s ? s->solution.aggregate_reward : NAN; }
double grr_solution_lb(const grr_solution* s) { return s ? s->solution.lb : NAN; }
double grr_solution_ub(const grr_solution* s) { return s ? s->solution.ub : NAN; }
size_t grr_solution_crew_count(const grr_solution* s) { return s ? s->solution.schedule.tours.size() : 0; }

size_t grr_solution_tour(const grr_solution* s, size_t crew, int* nodes, size_t capacity) {
  if (!s || crew >= s->solution.schedule.tours.size()) return 0;
  const auto& tour = s->solution.schedule.tours[crew];
  for (size_t i = 0; i < tour.size() && i < capacity && nodes; ++i) nodes[i] = tour[i];
  return tour.size();
}

grr_status grr_solution_to_json(const grr_problem* problem, const grr_solution* solution, char** out) {
  return guarded([&] {
    require(problem != nullptr && solution != nullptr && out != nullptr, "null argument");
    require(problem->crews.has_value(), "crews are not set");
    const Solution& s = solution->solution;
    ordered_json doc;
    doc["status"] = to_string(s.status);
    doc["objective"] = s.objective;
    doc["aggregate_reward"] = s.aggregate_reward;
    doc["lb"] = s.lb;
    doc["ub"] = s.ub;
    doc["gap"] = s.has_schedule() ? s.gap() : std::numeric_limits<double>::infinity();
    doc["nodes_explored"] = s.stats.nodes;
    ordered_json tours = ordered_json::array();
    for (std::size_t c = 0; c < s.schedule.tours.size(); ++c) {
      ordered_json t;
      t["crew"] = c;
      t["budget"] = problem->crews->effective_budget(c);
      t["spent"] = s.spent.at(c);
      ordered_json jobs = ordered_json::array();
      for (NodeIndex node : s.schedule.tours[c]) {
        ordered_json j;
        j["node"] = node;
        j["line"] = line_json(problem->network, problem->graphs.jobs.line_of(node).line);
        jobs.push_back(j);
      }
      t["jobs"] = jobs;
      tours.push_back(t);
    }
    doc["tours"] = tours;
    *out = copy_string(doc.dump(2) + "\n");
  });
}

grr_status grr_simulate_file(const char* scenario_path, char** csv_out) {
  return guarded([&] {
    require(scenario_path != nullptr && csv_out != nullptr, "null argument");
    const Scenario s = load_scenario(scenario_path);
    *csv_out = copy_string(timeline_csv(s, simulate(s)));
  });
}

void grr_sweep_overrides_init(grr_sweep_overrides* o) {
  if (!o) return;
  o->trials = -1;
  o->threads = -1;
  o->has_seed = 0;
  o->seed = 0;
  o->timing = 0;
}

grr_status grr_sweep_file(const char* spec_path, const grr_sweep_overrides* overrides, char** csv_out) {
  return guarded([&] {
    require(spec_path != nullptr && csv_out != nullptr, "null argument");
    SweepSpec spec = load_sweep(spec_path);
    if (overrides) {
      if (overrides->trials >= 0) spec.trials = static_cast<std::size_t>(overrides->trials);
      if (overrides->threads >= 0) spec.threads = static_cast<std::size_t>(overrides->threads);
      if (overrides->has_seed) spec.seed = overrides->seed;
      if (overrides->timing) spec.timing = true;
    }
    *csv_out = copy_string(csv_text(run_sweep(spec)));
  });
}

}  // extern "C"

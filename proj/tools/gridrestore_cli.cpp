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

// Command-line front end over the C interface.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridrestore.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitLimit = 4;

struct Fail {
  int code;
};

int exit_code_for(grr_status s) {
  switch (s) {
    case GRR_OK: return kExitOk;
    case GRR_INFEASIBLE: return kExitInfeasible;
    case GRR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

void check(grr_status s) {
  if (s == GRR_OK) return;
  std::cerr << "error: " << grr_last_error() << "\n";
  throw Fail{exit_code_for(s)};
}

struct Text {
  char* p = nullptr;
  ~Text() { grr_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using Network = Handle<grr_network, grr_network_free>;
using Problem = Handle<grr_problem, grr_problem_free>;
using SolutionHandle = Handle<grr_solution, grr_solution_free>;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Fail{kExitInput};
  }
}

struct ProblemArgs {
  std::string feeder;
  double speed = 1.0;
  std::string damage = "auto";
  double mean_repair = 47.725;
  double shape = 2.0;
  double floor = 30.0;
  std::uint64_t seed = 1;
  std::string samples_out;
};

void add_problem_flags(CLI::App* cmd, ProblemArgs& a) {
  cmd->add_option("--feeder", a.feeder, "Feeder or fixture JSON file")->required();
  cmd->add_option("--speed", a.speed, "Travel speed in ft/min")->check(CLI::PositiveNumber);
  cmd->add_option("--damage", a.damage, "auto: file annotations if any, else all lines; all: every line")
      ->check(CLI::IsMember({"auto", "all"}));
  cmd->add_option("--mean-repair", a.mean_repair, "Post-floor mean repair time (min)");
  cmd->add_option("--shape", a.shape, "Weibull shape")->check(CLI::PositiveNumber);
  cmd->add_option("--floor", a.floor, "Repair time floor (min)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", a.seed, "Random seed for repair times");
  cmd->add_option("--samples-out", a.samples_out, "Write sampled repair times as CSV");
}

void build_problem(const ProblemArgs& a, Network& net, Problem& problem) {
  check(grr_network_load(a.feeder.c_str(), &net.p));
  const bool sample = a.damage == "all" || !grr_network_is_annotated(net.p);
  grr_damage_plan plan;
  grr_damage_plan_init(&plan);
  plan.mean_repair = a.mean_repair;
  plan.shape = a.shape;
  plan.floor = a.floor;
  plan.seed = a.seed;
  check(grr_problem_create(net.p, sample ? &plan : nullptr, a.speed, &problem.p));
  if (!a.samples_out.empty()) {
    Text csv;
    check(grr_problem_repair_csv(problem.p, &csv.p));
    write_output(a.samples_out, csv.str());
  }
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crew scheduling for distribution network restoration"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(grr_version()));

  ProblemArgs tr;
  std::string transform_out;
  auto* transform = app.add_subcommand("transform", "Dump the working graphs as JSON");
  add_problem_flags(transform, tr);
  transform->add_option("--out", transform_out, "Output file (default stdout)");

  ProblemArgs sv;
  std::size_t crews = 0;
  std::vector<double> budgets;
  double window = 0.0;
  std::string mode = "strict";
  bool vi = false;
  std::string objective = "reward";
  double time_limit = 0.0;
  double gap = 0.0;
  double rel_gap = 0.0;
  std::string export_mps;
  std::string export_lp;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Solve one restoration window");
  add_problem_flags(solve, sv);
  solve->add_option("--crews", crews, "Number of crews");
  solve->add_option("--budgets", budgets, "Per-crew budgets in minutes (one value applies to all)")
      ->required()
      ->delimiter(',');
  solve->add_option("--window", window, "Window length in minutes");
  solve->add_option("--mode", mode, "Home-degree handling")->check(CLI::IsMember({"strict", "relaxed", "dummy"}));
  solve->add_flag("--vi", vi, "Add valid inequalities to exported models");
  solve->add_option("--objective", objective, "Objective")->check(CLI::IsMember({"reward", "profit"}));
  solve->add_option("--time-limit", time_limit, "Wall-time limit in seconds")->check(CLI::NonNegativeNumber);
  solve->add_option("--gap", gap, "Absolute gap tolerance")->check(CLI::NonNegativeNumber);
  solve->add_option("--rel-gap", rel_gap, "Relative gap tolerance")->check(CLI::NonNegativeNumber);
  solve->add_option("--export-mps", export_mps, "Write the MILP in MPS format");
  solve->add_option("--export-lp", export_lp, "Write the MILP in LP format");
  solve->add_option("--out", solve_out, "Write the solution JSON");

  std::string scenario;
  std::string simulate_out;
  auto* simulate = app.add_subcommand("simulate", "Run a rolling-horizon scenario");
  simulate->add_option("scenario", scenario, "Scenario JSON file")->required();
  simulate->add_option("--out", simulate_out, "Timeline CSV (default stdout)");

  std::string sweep_spec;
  std::string sweep_out;
  long long trials = -1;
  long long threads = -1;
  std::uint64_t sweep_seed = 0;
  bool timing = false;
  auto* sweep = app.add_subcommand("sweep", "Run a trial grid and emit metrics CSV");
  sweep->add_option("spec", sweep_spec, "Sweep spec JSON file")->required();
  auto* seed_opt = sweep->add_option("--seed", sweep_seed, "Master seed");
  sweep->add_option("--trials", trials, "Trials per cell");
  sweep->add_option("--threads", threads, "Worker threads (0: all cores)");
  sweep->add_flag("--timing", timing, "Report solve times (output is then not reproducible)");
  sweep->add_option("--out", sweep_out, "Metrics CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*transform) {
      Network net;
      Problem problem;
      build_problem(tr, net, problem);
      Text json;
      check(grr_problem_dump_json(problem.p, &json.p));
      write_output(transform_out, json.str());
      return kExitOk;
    }

    if (*solve) {
      if (crews == 0) crews = budgets.size();
      if (budgets.size() == 1 && crews > 1) budgets.assign(crews, budgets.front());
      if (budgets.size() != crews) {
        std::cerr << "error: --crews " << crews << " does not match " << budgets.size() << " budgets\n";
        return kExitInput;
      }
      Network net;
      Problem problem;
      build_problem(sv, net, problem);
      check(grr_problem_set_crews(problem.p, budgets.data(), budgets.size(), window));
      grr_options opts;
      grr_options_init(&opts);
      opts.objective = objective == "profit" ? GRR_OBJECTIVE_PROFIT : GRR_OBJECTIVE_REWARD;
      opts.home_degree = mode == "relaxed" ? GRR_MODE_RELAXED : mode == "dummy" ? GRR_MODE_DUMMY : GRR_MODE_STRICT;
      opts.valid_inequalities = vi ? 1 : 0;
      check(grr_problem_set_options(problem.p, &opts));
      if (!export_mps.empty()) {
        Text t;
        check(grr_problem_export_model(problem.p, GRR_FORMAT_MPS, &t.p));
        write_output(export_mps, t.str());
      }
      if (!export_lp.empty()) {
        Text t;
        check(grr_problem_export_model(problem.p, GRR_FORMAT_LP, &t.p));
        write_output(export_lp, t.str());
      }
      grr_limits limits;
      grr_limits_init(&limits);
      limits.time_limit_s = time_limit;
      limits.abs_gap = gap;
      limits.rel_gap = rel_gap;
      SolutionHandle sol;
      check(grr_solve(problem.p, &limits, &sol.p));

      Text json;
      check(grr_solution_to_json(problem.p, sol.p, &json.p));
      if (!solve_out.empty()) write_output(solve_out, json.str());

      const int status = grr_solution_status(sol.p);
      static const char* names[] = {"optimal", "feasible", "infeasible", "limit"};
      std::cout << "status: " << names[status] << "\n";
      if (grr_solution_has_schedule(sol.p)) {
        std::cout << "AR: " << format_number(grr_solution_aggregate_reward(sol.p)) << "\n";
        std::cout << "objective: " << format_number(grr_solution_objective(sol.p)) << "\n";
        std::cout << "LB: " << format_number(grr_solution_lb(sol.p)) << "  UB: " << format_number(grr_solution_ub(sol.p))
                  << "  gap: " << format_number(grr_solution_ub(sol.p) - grr_solution_lb(sol.p)) << "\n";
        for (std::size_t c = 0; c < grr_solution_crew_count(sol.p); ++c) {
          std::vector<int> nodes(grr_solution_tour(sol.p, c, nullptr, 0));
          grr_solution_tour(sol.p, c, nodes.data(), nodes.size());
          std::cout << "crew " << c << ":";
          if (nodes.empty()) std::cout << " (home)";
          for (int n : nodes) std::cout << " " << n;
          std::cout << "\n";
        }
      }
      if (status == GRR_SOLVE_INFEASIBLE) return kExitInfeasible;
      if (status == GRR_SOLVE_LIMIT && !grr_solution_has_schedule(sol.p)) return kExitLimit;
      return kExitOk;
    }

    if (*simulate) {
      Text csv;
      check(grr_simulate_file(scenario.c_str(), &csv.p));
      write_output(simulate_out, csv.str());
      return kExitOk;
    }

    if (*sweep) {
      grr_sweep_overrides o;
      grr_sweep_overrides_init(&o);
      o.trials = trials;
      o.threads = threads;
      o.has_seed = *seed_opt ? 1 : 0;
      o.seed = sweep_seed;
      o.timing = timing ? 1 : 0;
      Text csv;
      check(grr_sweep_file(sweep_spec.c_str(), &o, &csv.p));
      write_output(sweep_out, csv.str());
      return kExitOk;
    }
  } catch (const Fail& f) {
    return f.code;
  }
  return kExitInternal;
}

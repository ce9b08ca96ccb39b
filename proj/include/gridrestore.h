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

/* C interface to the gridrestore library. All handles are opaque; every
 * function returning grr_status leaves a message for grr_last_error() on
 * failure. Strings returned through char** are owned by the caller and must
 * be released with grr_string_free(). */

#ifndef GRIDRESTORE_H_
#define GRIDRESTORE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GRR_API __declspec(dllexport)
#else
#define GRR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum grr_status {
  GRR_OK = 0,
  GRR_INVALID_ARGUMENT = 1,
  GRR_PARSE = 2,
  GRR_IO = 3,
  GRR_TOPOLOGY = 4,
  GRR_UNREACHABLE = 5,
  GRR_TOO_LARGE = 6,
  GRR_INFEASIBLE = 7,
  GRR_INTERNAL = 8
} grr_status;

typedef enum grr_objective { GRR_OBJECTIVE_REWARD = 0, GRR_OBJECTIVE_PROFIT = 1 } grr_objective;

typedef enum grr_home_degree {
  GRR_MODE_STRICT = 0,
  GRR_MODE_RELAXED = 1,
  GRR_MODE_DUMMY = 2
} grr_home_degree;

typedef enum grr_solve_status {
  GRR_SOLVE_OPTIMAL = 0,
  GRR_SOLVE_FEASIBLE = 1,
  GRR_SOLVE_INFEASIBLE = 2,
  GRR_SOLVE_LIMIT = 3
} grr_solve_status;

typedef enum grr_model_format { GRR_FORMAT_MPS = 0, GRR_FORMAT_LP = 1 } grr_model_format;

typedef struct grr_network grr_network;
typedef struct grr_problem grr_problem;
typedef struct grr_solution grr_solution;

GRR_API const char* grr_version(void);
/* Message of the last failure on the calling thread; never NULL. */
GRR_API const char* grr_last_error(void);
GRR_API void grr_string_free(char* s);

/* Feeder or fixture file (JSON). */
GRR_API grr_status grr_network_load(const char* path, grr_network** out);
GRR_API void grr_network_free(grr_network* net);
GRR_API size_t grr_network_line_count(const grr_network* net);
/* Nonzero when the file itself marks damaged lines. */
GRR_API int grr_network_is_annotated(const grr_network* net);
/* Off-diagonal extremes and mean of the site travel matrix in minutes. */
GRR_API grr_status grr_network_travel_range(const grr_network* net, double speed, double* min_out,
                                            double* max_out, double* mean_out);

typedef struct grr_damage_plan {
  double mean_repair; /* post-floor mean, minutes */
  double shape;
  double floor;
  double reward;
  uint64_t seed;
} grr_damage_plan;

GRR_API void grr_damage_plan_init(grr_damage_plan* plan);

/* Working graphs for `net` at `speed` ft/min. With plan == NULL the file's
 * damage annotations are used; otherwise every line is damaged with repair
 * times drawn from the plan. */
GRR_API grr_status grr_problem_create(const grr_network* net, const grr_damage_plan* plan, double speed,
                                      grr_problem** out);
GRR_API void grr_problem_free(grr_problem* problem);
/* Working-graph nodes including the root. */
GRR_API size_t grr_problem_node_count(const grr_problem* problem);

/* window <= 0 means no window cap. */
GRR_API grr_status grr_problem_set_crews(grr_problem* problem, const double* budgets, size_t count,
                                         double window);

typedef struct grr_options {
  int objective;   /* grr_objective */
  int home_degree; /* grr_home_degree */
  int valid_inequalities;
  int skip_root_precedence;
  int symmetry_breaking;
} grr_options;

GRR_API void grr_options_init(grr_options* options);
GRR_API grr_status grr_problem_set_options(grr_problem* problem, const grr_options* options);

/* Travel matrix, node weights and precedence arcs. */
GRR_API grr_status grr_problem_dump_json(const grr_problem* problem, char** out);
/* Sampled repair times, one CSV row per damaged line. */
GRR_API grr_status grr_problem_repair_csv(const grr_problem* problem, char** out);
GRR_API grr_status grr_problem_export_model(const grr_problem* problem, int format, char** out);

typedef struct grr_limits {
  double time_limit_s; /* <= 0: none */
  uint64_t node_limit; /* 0: none */
  double abs_gap;
  double rel_gap;
} grr_limits;

GRR_API void grr_limits_init(grr_limits* limits);

/* Fails with GRR_INVALID_ARGUMENT when no crews were set. Infeasibility is a
 * solution status, not an error. */
GRR_API grr_status grr_solve(const grr_problem* problem, const grr_limits* limits, grr_solution** out);
GRR_API void grr_solution_free(grr_solution* solution);
GRR_API int grr_solution_status(const grr_solution* solution);
GRR_API int grr_solution_has_schedule(const grr_solution* solution);
GRR_API double grr_solution_objective(const grr_solution* solution);
GRR_API double grr_solution_aggregate_reward(const grr_solution* solution);
GRR_API double grr_solution_lb(const grr_solution* solution);
GRR_API double grr_solution_ub(const grr_solution* solution);
GRR_API size_t grr_solution_crew_count(const grr_solution* solution);
/* Writes up to `capacity` node ids of crew `crew`'s tour; returns the tour
 * length. */
GRR_API size_t grr_solution_tour(const grr_solution* solution, size_t crew, int* nodes, size_t capacity);
GRR_API grr_status grr_solution_to_json(const grr_problem* problem, const grr_solution* solution, char** out);

/* Rolling-horizon run of a scenario file; returns the timeline CSV. */
GRR_API grr_status grr_simulate_file(const char* scenario_path, char** csv_out);

typedef struct grr_sweep_overrides {
  int64_t trials;  /* < 0: keep */
  int64_t threads; /* < 0: keep */
  int has_seed;
  uint64_t seed;
  int timing;      /* nonzero: report elapsed seconds */
} grr_sweep_overrides;

GRR_API void grr_sweep_overrides_init(grr_sweep_overrides* overrides);
/* Runs a sweep spec file; returns the metrics CSV. */
GRR_API grr_status grr_sweep_file(const char* spec_path, const grr_sweep_overrides* overrides, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* GRIDRESTORE_H_ */

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

/* Plain C client: the public header must compile as C99. */

#include <stdio.h>

#include "gridrestore.h"

int main(int argc, char** argv) {
  grr_network* net = NULL;
  grr_problem* problem = NULL;
  grr_solution* sol = NULL;
  const double budgets[3] = {30.0, 20.0, 30.0};
  int ok;

  if (argc < 2) return 2;
  if (grr_network_load(argv[1], &net) != GRR_OK) {
    fprintf(stderr, "load: %s\n", grr_last_error());
    return 1;
  }
  if (grr_problem_create(net, NULL, 1.0, &problem) != GRR_OK ||
      grr_problem_set_crews(problem, budgets, 3, 0.0) != GRR_OK ||
      grr_solve(problem, NULL, &sol) != GRR_OK) {
    fprintf(stderr, "solve: %s\n", grr_last_error());
    return 1;
  }
  ok = grr_solution_status(sol) == GRR_SOLVE_OPTIMAL && grr_solution_aggregate_reward(sol) == 3.0;
  printf("%s aggregate reward %.0f\n", grr_version(), grr_solution_aggregate_reward(sol));
  grr_solution_free(sol);
  grr_problem_free(problem);
  grr_network_free(net);
  return ok ? 0 : 1;
}

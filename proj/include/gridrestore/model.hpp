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

// Solver-neutral MILP for one restoration window: crew tours on the complete
// job graph, electrical-continuity precedence rows, and single-commodity-flow
// subtour elimination.
//
// Variable naming (stable, used by the MPS/LP writers):
//   y_i_c    crew c repairs node i (i = 0 is home)           binary
//   x_i_j_c  crew c travels the undirected edge (i, j), i<j  {0,1,2} if i = 0, else {0,1}
//   f_i_j    commodity flow on i -> j                        continuous >= 0
// Crew and node indices are zero-based.
//
// Every row and every variable domain carries a group tag:
//   depot (home visited), visit_domain, depot_edge_domain, edge_domain,
//   single_crew (at most one crew per job), degree, budget, precedence,
//   flow_root, flow_balance, flow_link, flow_cap, flow_domain (f >= 0) and
//   triangle (optional valid inequalities).
// Row names are the group tag followed by the indices involved.

#ifndef GRIDRESTORE_MODEL_HPP_
#define GRIDRESTORE_MODEL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridrestore/problem.hpp"
#include "gridrestore/transform.hpp"

namespace gridrestore {

enum class VarKind { kY, kX, kF };

struct Variable {
  std::string name;
  VarKind kind = VarKind::kY;
  double lower = 0.0;
  double upper = 1.0;  // +inf for flows
  bool integer = true;
  std::string domain_group;
};

struct Term {
  std::size_t var = 0;
  double coef = 0.0;
};

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Row {
  std::string name;
  std::string group;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

class MilpInstance {
 public:
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<Term>& objective() const { return objective_; }
  double objective_constant() const { return objective_constant_; }

  // Model nodes, including the parking node when one was appended.
  std::size_t node_count() const { return nodes_; }
  std::size_t crew_count() const { return crews_; }
  std::optional<NodeIndex> dummy_node() const { return dummy_; }
  const ModelOptions& options() const { return options_; }

  std::size_t y(NodeIndex i, std::size_t crew) const;
  std::size_t x(NodeIndex i, NodeIndex j, std::size_t crew) const;  // order-insensitive
  std::size_t f(NodeIndex from, NodeIndex to) const;

  std::size_t count(VarKind kind) const;
  std::size_t row_count(std::string_view group) const;

 private:
  friend MilpInstance assemble(const WorkingGraph&, const PrecedenceDag&, const CrewSpec&,
                               const ModelOptions&);

  std::vector<Variable> variables_;
  std::vector<Row> rows_;
  std::vector<Term> objective_;
  double objective_constant_ = 0.0;
  std::size_t nodes_ = 0;
  std::size_t crews_ = 0;
  std::optional<NodeIndex> dummy_;
  ModelOptions options_;
  std::size_t x_base_ = 0;
  std::size_t f_base_ = 0;
};

// Throws Error(kInvalidArgument) if a non-root node is undamaged (collapse the
// graphs first) or if there is nothing to schedule.
MilpInstance assemble(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                      const ModelOptions& options);

struct RowViolation {
  std::string name;   // row or variable name
  std::string group;
  double activity = 0.0;
  double bound = 0.0;
  double excess = 0.0;
};

// Rows and variable domains violated by more than `tol`.
std::vector<RowViolation> evaluate(const MilpInstance& instance, std::span<const double> values,
                                   double tol = 1e-9);
// Same, with values looked up by variable name. Throws Error(kInvalidArgument)
// naming the first variable with no value.
std::vector<RowViolation> evaluate(const MilpInstance& instance,
                                   const std::map<std::string, double>& by_name,
                                   double tol = 1e-9);

enum class ModelFormat { kMps, kLp };

// Free-format MPS or CPLEX LP text. Output is a pure function of the instance.
// The profit objective's constant is written as the objective row's RHS in MPS
// (solvers read it as minus the constant) and as a trailing constant in LP.
std::string export_model(const MilpInstance& instance, ModelFormat format);

// Matrix image of a schedule: y and x from the tours, flows routed from home
// along each tour so that a tour of k jobs carries k, k-1, ..., 1 units.
// Idle crews stay home, or park on the dummy node when the model has one.
std::vector<double> encode_schedule(const MilpInstance& instance, const Schedule& schedule);

}  // namespace gridrestore

#endif  // GRIDRESTORE_MODEL_HPP_

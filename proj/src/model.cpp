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

#include "gridrestore/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "gridrestore/error.hpp"

namespace gridrestore {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string join_name(std::string_view prefix, std::initializer_list<long long> parts) {
  std::string s(prefix);
  for (long long p : parts) {
    s += '_';
    s += std::to_string(p);
  }
  return s;
}

double activity(const Row& row, std::span<const double> values) {
  double a = 0.0;
  for (const Term& t : row.terms) a += t.coef * values[t.var];
  return a;
}

}  // namespace

std::size_t MilpInstance::y(NodeIndex i, std::size_t crew) const {
  return static_cast<std::size_t>(i) * crews_ + crew;
}

std::size_t MilpInstance::x(NodeIndex i, NodeIndex j, std::size_t crew) const {
  if (i > j) std::swap(i, j);
  const std::size_t a = static_cast<std::size_t>(i);
  const std::size_t b = static_cast<std::size_t>(j);
  // Pairs (a, b), a < b, enumerated row by row.
  const std::size_t pair = a * nodes_ - a * (a + 1) / 2 + (b - a - 1);
  return x_base_ + pair * crews_ + crew;
}

std::size_t MilpInstance::f(NodeIndex from, NodeIndex to) const {
  const std::size_t a = static_cast<std::size_t>(from);
  const std::size_t b = static_cast<std::size_t>(to);
  return f_base_ + a * (nodes_ - 1) + (b < a ? b : b - 1);
}

std::size_t MilpInstance::count(VarKind kind) const {
  return static_cast<std::size_t>(std::count_if(variables_.begin(), variables_.end(),
                                                [kind](const Variable& v) { return v.kind == kind; }));
}

std::size_t MilpInstance::row_count(std::string_view group) const {
  return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(),
                                                [group](const Row& r) { return r.group == group; }));
}

MilpInstance assemble(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                      const ModelOptions& options) {
  if (gw.size() < 2) throw Error(ErrorCode::kInvalidArgument, "nothing to schedule");
  for (std::size_t i = 1; i < gw.size(); ++i)
    if (!gw.damaged(i))
      throw Error(ErrorCode::kInvalidArgument,
                  "node " + std::to_string(i) + " is undamaged; collapse the working graphs first");
  if (gwd.node_count() != gw.size())
    throw Error(ErrorCode::kInvalidArgument, "precedence dag does not match the working graph");

  MilpInstance inst;
  inst.options_ = options;
  inst.crews_ = crews.size();
  inst.nodes_ = gw.size();
  if (options.home_degree == HomeDegree::kDummyNode) {
    inst.dummy_ = static_cast<NodeIndex>(gw.size());
    ++inst.nodes_;
  }
  const std::size_t n = inst.nodes_;
  const std::size_t m = inst.crews_;
  const auto node = [](std::size_t i) { return static_cast<NodeIndex>(i); };
  const auto is_dummy = [&](std::size_t i) { return inst.dummy_ && node(i) == *inst.dummy_; };
  const auto repair = [&](std::size_t i) { return is_dummy(i) ? 0.0 : gw.repair(i); };
  const auto travel = [&](std::size_t i, std::size_t j) {
    return (is_dummy(i) || is_dummy(j)) ? 0.0 : gw.travel(i, j);
  };

  auto& vars = inst.variables_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < m; ++c)
      vars.push_back({join_name("y", {(long long)i, (long long)c}), VarKind::kY, 0.0, 1.0, true,
                      i == 0 ? "depot" : "visit_domain"});
  inst.x_base_ = vars.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t c = 0; c < m; ++c)
        vars.push_back({join_name("x", {(long long)i, (long long)j, (long long)c}), VarKind::kX, 0.0,
                        i == 0 ? 2.0 : 1.0, true, i == 0 ? "depot_edge_domain" : "edge_domain"});
  inst.f_base_ = vars.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        vars.push_back({join_name("f", {(long long)i, (long long)j}), VarKind::kF, 0.0, kInf, false, "flow_domain"});

  // Objective.
  if (options.objective == Objective::kReward) {
    for (std::size_t i = 1; i < gw.size(); ++i)
      if (gw.reward(i) != 0.0)
        for (std::size_t c = 0; c < m; ++c) inst.objective_.push_back({inst.y(node(i), c), gw.reward(i)});
  } else {
    for (std::size_t i = 1; i < gw.size(); ++i) {
      const double coef = gw.reward(i) + gw.penalty(i);
      inst.objective_constant_ -= gw.penalty(i) * static_cast<double>(m);
      if (coef != 0.0)
        for (std::size_t c = 0; c < m; ++c) inst.objective_.push_back({inst.y(node(i), c), coef});
    }
  }

  auto& rows = inst.rows_;
  for (std::size_t c = 0; c < m; ++c)
    rows.push_back({join_name("depot", {(long long)c}), "depot", {{inst.y(0, c), 1.0}}, Sense::kEqual, 1.0});

  for (std::size_t i = 1; i < n; ++i) {
    if (is_dummy(i)) continue;
    Row r{join_name("single_crew", {(long long)i}), "single_crew", {}, Sense::kLessEqual, 1.0};
    for (std::size_t c = 0; c < m; ++c) r.terms.push_back({inst.y(node(i), c), 1.0});
    rows.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < m; ++c) {
      Row r{join_name("degree", {(long long)i, (long long)c}), "degree", {}, Sense::kEqual, 0.0};
      if (i == 0 && options.home_degree == HomeDegree::kRelaxed) r.sense = Sense::kLessEqual;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) r.terms.push_back({inst.x(node(i), node(j), c), 1.0});
      r.terms.push_back({inst.y(node(i), c), -2.0});
      rows.push_back(std::move(r));
    }

  for (std::size_t c = 0; c < m; ++c) {
    Row r{join_name("budget", {(long long)c}), "budget", {}, Sense::kLessEqual, crews.effective_budget(c)};
    for (std::size_t i = 1; i < n; ++i)
      if (repair(i) != 0.0) r.terms.push_back({inst.y(node(i), c), repair(i)});
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (travel(i, j) != 0.0) r.terms.push_back({inst.x(node(i), node(j), c), travel(i, j)});
    rows.push_back(std::move(r));
  }

  for (const PrecedenceArc& a : gwd.sorted_arcs()) {
    if (a.tail == 0 && options.skip_root_precedence) continue;
    Row r{join_name("precedence", {a.tail, a.head}), "precedence", {}, Sense::kGreaterEqual, 0.0};
    for (std::size_t c = 0; c < m; ++c) r.terms.push_back({inst.y(a.tail, c), 1.0});
    for (std::size_t c = 0; c < m; ++c) r.terms.push_back({inst.y(a.head, c), -1.0});
    rows.push_back(std::move(r));
  }

  // Σ_c Σ_{i≠0} y_ic, reused by the flow rows.
  std::vector<Term> visited;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t c = 0; c < m; ++c) visited.push_back({inst.y(node(i), c), 1.0});

  {
    Row r{"flow_root", "flow_root", {}, Sense::kEqual, 0.0};
    for (std::size_t j = 1; j < n; ++j) r.terms.push_back({inst.f(0, node(j)), 1.0});
    for (std::size_t j = 1; j < n; ++j) r.terms.push_back({inst.f(node(j), 0), -1.0});
    for (const Term& t : visited) r.terms.push_back({t.var, -1.0});
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 1; i < n; ++i) {
    Row r{join_name("flow_balance", {(long long)i}), "flow_balance", {}, Sense::kEqual, 0.0};
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r.terms.push_back({inst.f(node(i), node(j)), 1.0});
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r.terms.push_back({inst.f(node(j), node(i)), -1.0});
    for (std::size_t c = 0; c < m; ++c) r.terms.push_back({inst.y(node(i), c), 1.0});
    rows.push_back(std::move(r));
  }
  const double cap = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Row r{join_name("flow_link", {(long long)i, (long long)j}), "flow_link", {{inst.f(node(i), node(j)), 1.0}},
            Sense::kLessEqual, 0.0};
      for (std::size_t c = 0; c < m; ++c) r.terms.push_back({inst.x(node(i), node(j), c), -cap});
      rows.push_back(std::move(r));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Row r{join_name("flow_cap", {(long long)i, (long long)j}), "flow_cap", {{inst.f(node(i), node(j)), 1.0}},
            Sense::kLessEqual, 0.0};
      for (const Term& t : visited) r.terms.push_back({t.var, -1.0});
      rows.push_back(std::move(r));
    }

  if (options.valid_inequalities) {
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::size_t k = j + 1; k < n; ++k) {
            const std::size_t pairs[3][2] = {{i, j}, {j, k}, {i, k}};
            for (int a = 0; a < 3; ++a) {
              Row r{join_name("triangle", {(long long)i, (long long)j, (long long)k, (long long)c, a}), "triangle", {},
                    Sense::kLessEqual, 0.0};
              r.terms.push_back({inst.x(node(i), node(j), c), 1.0});
              r.terms.push_back({inst.x(node(j), node(k), c), 1.0});
              r.terms.push_back({inst.x(node(i), node(k), c), 1.0});
              r.terms.push_back({inst.y(node(pairs[a][0]), c), -1.0});
              r.terms.push_back({inst.y(node(pairs[a][1]), c), -1.0});
              rows.push_back(std::move(r));
            }
          }
  }
  return inst;
}

std::vector<RowViolation> evaluate(const MilpInstance& instance, std::span<const double> values,
                                   double tol) {
  if (values.size() != instance.variables().size())
    throw Error(ErrorCode::kInvalidArgument,
                "assignment has " + std::to_string(values.size()) + " values, model has " +
                    std::to_string(instance.variables().size()) + " variables");
  std::vector<RowViolation> out;
  for (std::size_t v = 0; v < values.size(); ++v) {
    const Variable& var = instance.variables()[v];
    const double val = values[v];
    double excess = 0.0;
    double bound = 0.0;
    if (val < var.lower - tol) {
      excess = var.lower - val;
      bound = var.lower;
    } else if (val > var.upper + tol) {
      excess = val - var.upper;
      bound = var.upper;
    } else if (var.integer && std::abs(val - std::round(val)) > tol) {
      excess = std::abs(val - std::round(val));
      bound = std::round(val);
    }
    if (excess > 0.0 || std::isnan(val))
      out.push_back({var.name, var.domain_group, val, bound, std::isnan(val) ? kInf : excess});
  }
  for (const Row& row : instance.rows()) {
    const double a = activity(row, values);
    double excess = 0.0;
    switch (row.sense) {
      case Sense::kLessEqual: excess = a - row.rhs; break;
      case Sense::kGreaterEqual: excess = row.rhs - a; break;
      case Sense::kEqual: excess = std::abs(a - row.rhs); break;
    }
    if (excess > tol || std::isnan(a)) out.push_back({row.name, row.group, a, row.rhs, excess});
  }
  return out;
}

std::vector<RowViolation> evaluate(const MilpInstance& instance,
                                   const std::map<std::string, double>& by_name, double tol) {
  std::vector<double> values;
  values.reserve(instance.variables().size());
  for (const Variable& v : instance.variables()) {
    auto it = by_name.find(v.name);
    if (it == by_name.end()) throw Error(ErrorCode::kInvalidArgument, "no value for variable " + v.name);
    values.push_back(it->second);
  }
  return evaluate(instance, values, tol);
}

namespace {

const char* mps_sense(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return "L";
    case Sense::kGreaterEqual: return "G";
    case Sense::kEqual: return "E";
  }
  return "E";
}

const char* lp_sense(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return "<=";
    case Sense::kGreaterEqual: return ">=";
    case Sense::kEqual: return "=";
  }
  return "=";
}

std::string write_mps(const MilpInstance& inst) {
  const auto& vars = inst.variables();
  // Column-major view of objective and rows.
  std::vector<std::vector<std::pair<std::string_view, double>>> cols(vars.size());
  for (const Term& t : inst.objective())
    if (t.coef != 0.0) cols[t.var].emplace_back("obj", t.coef);
  for (const Row& r : inst.rows())
    for (const Term& t : r.terms)
      if (t.coef != 0.0) cols[t.var].emplace_back(r.name, t.coef);

  std::ostringstream os;
  os << "NAME gridrestore\n";
  os << "OBJSENSE\n    MAX\n";
  os << "ROWS\n N obj\n";
  for (const Row& r : inst.rows()) os << " " << mps_sense(r.sense) << " " << r.name << "\n";
  os << "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (vars[v].integer != in_int) {
      os << "    MARKER" << marker++ << " 'MARKER' " << (vars[v].integer ? "'INTORG'" : "'INTEND'") << "\n";
      in_int = vars[v].integer;
    }
    for (const auto& [row, coef] : cols[v]) os << "    " << vars[v].name << " " << row << " " << num(coef) << "\n";
  }
  if (in_int) os << "    MARKER" << marker++ << " 'MARKER' 'INTEND'\n";
  os << "RHS\n";
  if (inst.objective_constant() != 0.0) os << "    RHS obj " << num(-inst.objective_constant()) << "\n";
  for (const Row& r : inst.rows())
    if (r.rhs != 0.0) os << "    RHS " << r.name << " " << num(r.rhs) << "\n";
  os << "BOUNDS\n";
  for (const Variable& v : vars) {
    if (v.lower != 0.0) os << " LO BND " << v.name << " " << num(v.lower) << "\n";
    if (std::isfinite(v.upper)) os << " UP BND " << v.name << " " << num(v.upper) << "\n";
  }
  os << "ENDATA\n";
  return os.str();
}

void lp_terms(std::ostringstream& os, const std::vector<Term>& terms,
              const std::vector<Variable>& vars) {
  int on_line = 0;
  bool first = true;
  for (const Term& t : terms) {
    if (t.coef == 0.0) continue;
    if (on_line == 8) {
      os << "\n   ";
      on_line = 0;
    }
    const double c = t.coef;
    if (first) {
      os << " " << (c < 0 ? "- " : "") << num(std::abs(c)) << " " << vars[t.var].name;
    } else {
      os << " " << (c < 0 ? "- " : "+ ") << num(std::abs(c)) << " " << vars[t.var].name;
    }
    first = false;
    ++on_line;
  }
  if (first) os << " 0 " << vars.front().name;
}

std::string write_lp(const MilpInstance& inst) {
  const auto& vars = inst.variables();
  std::ostringstream os;
  os << "\\ gridrestore restoration window model\n";
  os << "Maximize\n obj:";
  lp_terms(os, inst.objective(), vars);
  if (inst.objective_constant() != 0.0)
    os << " " << (inst.objective_constant() < 0 ? "- " : "+ ") << num(std::abs(inst.objective_constant()));
  os << "\nSubject To\n";
  for (const Row& r : inst.rows()) {
    os << " " << r.name << ":";
    lp_terms(os, r.terms, vars);
    os << " " << lp_sense(r.sense) << " " << num(r.rhs) << "\n";
  }
  os << "Bounds\n";
  for (const Variable& v : vars) {
    if (std::isfinite(v.upper))
      os << " " << num(v.lower) << " <= " << v.name << " <= " << num(v.upper) << "\n";
    else
      os << " " << v.name << " >= " << num(v.lower) << "\n";
  }
  os << "General\n";
  int on_line = 0;
  for (const Variable& v : vars) {
    if (!v.integer) continue;
    os << " " << v.name;
    if (++on_line == 10) {
      os << "\n";
      on_line = 0;
    }
  }
  if (on_line != 0) os << "\n";
  os << "End\n";
  return os.str();
}

}  // namespace

std::string export_model(const MilpInstance& instance, ModelFormat format) {
  return format == ModelFormat::kMps ? write_mps(instance) : write_lp(instance);
}

std::vector<double> encode_schedule(const MilpInstance& instance, const Schedule& schedule) {
  if (schedule.tours.size() != instance.crew_count())
    throw Error(ErrorCode::kInvalidArgument, "schedule has the wrong number of crews");
  std::vector<double> values(instance.variables().size(), 0.0);
  const auto nodes = static_cast<NodeIndex>(instance.node_count());
  for (std::size_t c = 0; c < schedule.tours.size(); ++c) {
    values[instance.y(0, c)] = 1.0;
    std::vector<NodeIndex> tour = schedule.tours[c];
    for (NodeIndex j : tour)
      if (j <= 0 || j >= nodes) throw Error(ErrorCode::kInvalidArgument, "tour visits an unknown node");
    if (tour.empty()) {
      if (!instance.dummy_node()) continue;
      tour.push_back(*instance.dummy_node());
    }
    for (NodeIndex j : tour) values[instance.y(j, c)] = 1.0;
    // Closed walk home -> tour -> home.
    NodeIndex prev = 0;
    const auto k = static_cast<double>(tour.size());
    for (std::size_t p = 0; p < tour.size(); ++p) {
      values[instance.x(prev, tour[p], c)] += 1.0;
      values[instance.f(prev, tour[p])] += k - static_cast<double>(p);
      prev = tour[p];
    }
    values[instance.x(prev, 0, c)] += 1.0;
  }
  return values;
}

}  // namespace gridrestore

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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridrestore/feeders.hpp"
#include "gridrestore/model.hpp"
#include "gridrestore/solve.hpp"
#include "gridrestore/transform.hpp"
#include "json.hpp"
#include "test_support.hpp"

using namespace gridrestore;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

WorkingGraphs sampled_feeder(const FeederData& f, double mean, std::uint64_t seed, double speed) {
  DamagePlan plan;
  plan.mean = mean;
  plan.seed = seed;
  const auto net = apply_damage(f.network, sample_repair_times(f.network, plan), 1.0);
  return build_working_graphs(net, f.transport, f.energized, speed);
}

// --- 1 -----------------------------------------------------------------------

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20261017);
  int mismatches = 0, infeasible = 0, nonempty = 0, eight = 0;
  for (int trial = 0; trial < 200; ++trial) {
    testing::TreeOptions t;
    t.max_damaged = std::uniform_int_distribution<int>(1, 8)(rng);
    t.min_damaged = t.max_damaged;
    t.buses = std::uniform_int_distribution<int>(t.max_damaged + 1, 14)(rng);
    const auto inst = testing::random_radial(rng, t);
    const double speed = std::uniform_real_distribution<double>(10.0, 200.0)(rng);
    const auto wg = testing::working_graphs(inst, speed);
    eight += wg.graph.size() == 9;
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto crews = testing::random_crews(rng, m, 15.0, 150.0, false);
    SolverOptions o;
    o.home_degree = static_cast<HomeDegree>(trial % 3);
    const auto ex = solve_exact(wg.graph, wg.precedence, crews, o);
    const auto bf = solve_bruteforce(wg.graph, wg.precedence, crews, o);
    const bool same_status = (ex.status == SolveStatus::kInfeasible) == (bf.status == SolveStatus::kInfeasible);
    const bool same_value = !bf.has_schedule() || (ex.has_schedule() && ex.objective == bf.objective);
    if (!same_status || !same_value || ex.status == SolveStatus::kLimit) ++mismatches;
    infeasible += bf.status == SolveStatus::kInfeasible;
    nonempty += bf.aggregate_reward > 0;
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 300.0,
          std::to_string(mismatches) + " mismatches in 200 instances (" + std::to_string(infeasible) +
              " infeasible, " + std::to_string(nonempty) + " with reward, " + std::to_string(eight) +
              " with 8 jobs), " + fmt("%.1f s", secs) + " < 300 s"};
}

// --- 2 -----------------------------------------------------------------------

Outcome four_bus_chain() {
  const auto wg = testing::fixture_graphs("chain4", 1.0);
  const auto solve = [&](std::vector<double> budgets, HomeDegree mode) {
    SolverOptions o;
    o.home_degree = mode;
    const CrewSpec crews(budgets);
    const auto ex = solve_exact(wg.graph, wg.precedence, crews, o);
    const auto bf = solve_bruteforce(wg.graph, wg.precedence, crews, o);
    if ((ex.status == SolveStatus::kInfeasible) != (bf.status == SolveStatus::kInfeasible) ||
        ex.aggregate_reward != bf.aggregate_reward)
      return std::string("disagree");
    if (ex.status == SolveStatus::kInfeasible) return std::string("infeasible");
    return fmt("%.0f", ex.aggregate_reward);
  };
  const std::string m1 = solve({30}, HomeDegree::kStrict);
  const std::string m3 = solve({30, 20, 30}, HomeDegree::kStrict);
  const std::string m2s = solve({30, 20}, HomeDegree::kStrict);
  const std::string m2r = solve({30, 20}, HomeDegree::kRelaxed);
  const std::string m2d = solve({30, 20}, HomeDegree::kDummyNode);
  const bool ok = m1 == "1" && m3 == "3" && m2s == "infeasible" && m2r == "1" && m2d == "1";
  return {ok, "m=1 AR " + m1 + ", m=3 AR " + m3 + ", m=2 strict " + m2s + ", m=2 relaxed AR " + m2r +
                  ", m=2 dummy AR " + m2d};
}

// --- 3 -----------------------------------------------------------------------

Outcome star_reduction() {
  std::mt19937_64 rng(303);
  int differ = 0, rows_left = 0;
  double total = 0;
  for (int trial = 0; trial < 50; ++trial) {
    testing::TreeOptions t;
    t.star = true;
    t.buses = std::uniform_int_distribution<int>(3, 10)(rng);
    t.energize_probability = 0.0;
    t.damage_probability = 0.9;
    const auto inst = testing::random_radial(rng, t);
    const auto wg = testing::working_graphs(inst, std::uniform_real_distribution<double>(20.0, 150.0)(rng));
    const std::size_t m = 1 + trial % 3;
    const auto crews = testing::random_crews(rng, m, 30.0, 150.0, false);
    SolverOptions o;
    o.home_degree = HomeDegree::kRelaxed;
    const PrecedenceDag none(wg.graph.size(), {});
    const auto with = solve_exact(wg.graph, wg.precedence, crews, o);
    const auto without = solve_exact(wg.graph, none, crews, o);
    if (with.objective != without.objective) ++differ;
    total += with.objective;
    // With root-tailed rows skipped, the model carries no precedence rows.
    ModelOptions mo;
    rows_left += static_cast<int>(assemble(wg.graph, wg.precedence, crews, mo).row_count("precedence"));
  }
  return {differ == 0 && rows_left == 0,
          std::to_string(differ) + " of 50 optima differ without precedence rows; " + std::to_string(rows_left) +
              " precedence rows emitted; mean optimum " + fmt("%.2f", total / 50)};
}

// --- 4 -----------------------------------------------------------------------

Outcome collapse_correctness() {
  std::ifstream in(testing::data_path("fixtures/line_graph15.json"));
  const auto doc = nlohmann::json::parse(in);
  std::vector<PrecedenceArc> arcs;
  for (const auto& a : doc["arcs"]) arcs.push_back({a[0].get<NodeIndex>(), a[1].get<NodeIndex>()});
  const std::size_t n = doc["nodes"].get<std::size_t>();
  std::vector<bool> damaged(n, false);
  for (const auto& d : doc["damaged"]) damaged[d.get<std::size_t>()] = true;
  const std::vector<PrecedenceArc> want{{0, 3}, {0, 4}, {0, 5}, {0, 7}, {3, 12}, {4, 14}};
  const bool fixture = collapse_undamaged(PrecedenceDag(n, arcs), damaged).dag.sorted_arcs() == want;

  std::mt19937_64 rng(404);
  int wrong = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 60)(rng);
    std::vector<NodeIndex> parent(k, -1);
    std::vector<PrecedenceArc> tree;
    for (std::size_t v = 1; v < k; ++v) {
      parent[v] = static_cast<NodeIndex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
      tree.push_back({parent[v], static_cast<NodeIndex>(v)});
    }
    std::vector<bool> dmg(k, false);
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    for (std::size_t v = 1; v < k; ++v) dmg[v] = std::bernoulli_distribution(p)(rng);
    std::vector<PrecedenceArc> oracle;
    for (std::size_t v = 1; v < k; ++v) {
      if (!dmg[v]) continue;
      NodeIndex a = parent[v];
      while (a != 0 && !dmg[a]) a = parent[a];
      oracle.push_back({a, static_cast<NodeIndex>(v)});
    }
    std::sort(oracle.begin(), oracle.end());
    if (collapse_undamaged(PrecedenceDag(k, tree), dmg).dag.sorted_arcs() != oracle) ++wrong;
  }
  return {fixture && wrong == 0, std::string("fixture ") + (fixture ? "matches" : "differs") + "; " +
                                     std::to_string(wrong) + " of 500 random trees differ from the oracle"};
}

// --- 5 and 6 -------------------------------------------------------------------

struct FeederTrial {
  double ar = 0;
  double seconds = 0;
  SolveStatus status = SolveStatus::kLimit;
};

FeederTrial feeder_trial(const FeederData& f, double mean, std::uint64_t seed, std::size_t m, double budget,
                         double limit_s) {
  const auto wg = sampled_feeder(f, mean, seed, 141.0);
  SolverOptions o;
  o.home_degree = HomeDegree::kRelaxed;
  SearchLimits lim;
  lim.time_limit_s = limit_s;
  const auto t0 = Clock::now();
  const auto s = solve_exact(wg.graph, wg.precedence, CrewSpec::uniform(m, budget), o, lim);
  return {s.aggregate_reward, seconds_since(t0), s.status};
}

Outcome thirteen_bus_short_budget() {
  const FeederData f = load_feeder(testing::data_path("feeders/ieee13.json"));
  int hits = 0, optimal = 0;
  double slowest = 0;
  std::string ars;
  for (int i = 0; i < 10; ++i) {
    const double mean = 47.0 + (66.0 - 47.0) * i / 9.0;
    const auto r = feeder_trial(f, mean, SplitMix64::derive(5, {static_cast<std::uint64_t>(i)}).next(), 4, 60.0, 60.0);
    hits += r.ar == 4.0;
    optimal += r.status == SolveStatus::kOptimal;
    slowest = std::max(slowest, r.seconds);
    ars += (ars.empty() ? "" : " ") + fmt("%.0f", r.ar);
  }
  return {hits == 10 && optimal == 10,
          "AR = 4 in " + std::to_string(hits) + "/10 trials (AR by mean 47..66: " + ars + "), " +
              std::to_string(optimal) + "/10 optimal, slowest " + fmt("%.3f s", slowest)};
}

Outcome thirteen_bus_long_budget() {
  const FeederData f = load_feeder(testing::data_path("feeders/ieee13.json"));
  int hits = 0, optimal = 0;
  double slowest = 0;
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    const auto r = feeder_trial(f, 47.725, SplitMix64::derive(6, {trial}).next(), 4, 360.0, 120.0);
    hits += r.ar == 12.0;
    optimal += r.status == SolveStatus::kOptimal;
    slowest = std::max(slowest, r.seconds);
  }
  return {hits >= 8 && slowest < 120.0, "AR = 12 (NAR/crew 0.25) in " + std::to_string(hits) + "/10 trials, " +
                                            std::to_string(optimal) + "/10 optimal, slowest " + fmt("%.3f s", slowest)};
}

// --- 7 -----------------------------------------------------------------------

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Name up to the first index suffix: "flow_link_0_3" -> "flow_link".
std::string stem(const std::string& name) {
  for (std::size_t i = 0; i + 1 < name.size(); ++i)
    if (name[i] == '_' && std::isdigit(static_cast<unsigned char>(name[i + 1]))) return name.substr(0, i);
  return name;
}

// Counts columns and rows by name stem in the MPS text.
std::map<std::string, std::size_t> count_mps(const std::string& text) {
  std::map<std::string, std::size_t> out;
  std::istringstream in(text);
  std::string line, section, last_col;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != ' ') {
      section = line.substr(0, line.find(' '));
      continue;
    }
    std::istringstream ls(line);
    std::string a, b;
    ls >> a >> b;
    if (section == "ROWS") {
      ++out["row:" + stem(b)];
    } else if (section == "COLUMNS" && b != "'MARKER'" && a != last_col) {
      last_col = a;
      ++out["col:" + stem(a)];
    }
  }
  return out;
}

Outcome structural_counts() {
  std::mt19937_64 rng(707);
  int bad = 0;
  for (int trial = 0; trial < 20; ++trial) {
    testing::TreeOptions t;
    t.buses = std::uniform_int_distribution<int>(3, 9)(rng);
    t.damage_probability = 1.0;
    t.max_damaged = 9;
    t.energize_probability = 0.0;
    const auto inst = testing::random_radial(rng, t);
    const auto wg = testing::working_graphs(inst, 50.0);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    ModelOptions mo;
    mo.valid_inequalities = true;
    mo.home_degree = static_cast<HomeDegree>(trial % 3);
    const auto model = assemble(wg.graph, wg.precedence, CrewSpec::uniform(m, 100.0), mo);
    auto c = count_mps(export_model(model, ModelFormat::kMps));
    const std::size_t n = wg.graph.size() + (mo.home_degree == HomeDegree::kDummyNode ? 1 : 0);
    const bool ok = c["row:triangle"] == 3 * choose(n - 1, 3) * m && c["col:f"] == n * (n - 1) &&
                    c["col:y"] == n * m && c["col:x"] == m * n * (n - 1) / 2 &&
                    model.count(VarKind::kF) == n * (n - 1) && model.row_count("triangle") == c["row:triangle"] &&
                    c["row:flow_link"] == n * (n - 1) && c["row:flow_cap"] == n * (n - 1);
    bad += !ok;
  }
  return {bad == 0, std::to_string(bad) + " of 20 models deviate from the closed-form counts"};
}

// --- 8 -----------------------------------------------------------------------

// Violation kinds found by direct inspection of a schedule.
std::set<ScheduleViolationKind> inspect(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                                        const Schedule& s) {
  std::set<ScheduleViolationKind> kinds;
  std::vector<int> seen(gw.size(), 0);
  for (std::size_t c = 0; c < s.tours.size(); ++c) {
    double t = 0;
    NodeIndex prev = 0;
    for (NodeIndex j : s.tours[c]) {
      t += gw.travel(prev, j) + gw.repair(j);
      prev = j;
      ++seen[j];
    }
    if (t > crews.effective_budget(c) + 1e-9) kinds.insert(ScheduleViolationKind::kBudget);
  }
  for (std::size_t j = 1; j < gw.size(); ++j)
    if (seen[j] > 1) kinds.insert(ScheduleViolationKind::kDuplicate);
  for (const auto& a : gwd.arcs())
    if (a.tail != 0 && seen[a.head] > 0 && seen[a.tail] == 0) kinds.insert(ScheduleViolationKind::kContinuity);
  return kinds;
}

Outcome checker_soundness() {
  std::mt19937_64 rng(808);
  int mutations = 0, violating = 0, missed = 0, spurious = 0;
  int solved = 0, rejected_outputs = 0, encoding_failures = 0;
  std::map<std::string, int> by_kind;
  while (mutations < 1000) {
    testing::TreeOptions t;
    t.buses = std::uniform_int_distribution<int>(5, 12)(rng);
    t.max_damaged = 8;
    t.damage_probability = 0.85;
    const auto inst = testing::random_radial(rng, t);
    const auto wg = testing::working_graphs(inst, std::uniform_real_distribution<double>(20.0, 200.0)(rng));
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto crews = testing::random_crews(rng, m, 30.0, 150.0, false);
    SolverOptions o;
    o.home_degree = static_cast<HomeDegree>(solved % 3);
    const auto sol = solve_exact(wg.graph, wg.precedence, crews, o);
    if (!sol.has_schedule()) continue;
    ++solved;
    if (!check_schedule(wg.graph, wg.precedence, crews, sol.schedule).ok()) ++rejected_outputs;
    ModelOptions mo;
    mo.home_degree = o.home_degree;
    mo.valid_inequalities = true;
    const auto model = assemble(wg.graph, wg.precedence, crews, mo);
    if (!evaluate(model, encode_schedule(model, sol.schedule)).empty()) ++encoding_failures;
    if (sol.schedule.job_count() == 0) continue;

    std::vector<NodeIndex> scheduled;
    std::vector<bool> in(wg.graph.size(), false);
    for (const auto& tour : sol.schedule.tours)
      for (NodeIndex j : tour) scheduled.push_back(j), in[j] = true;
    const auto pick = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi - 1)(rng); };

    for (int rep = 0; rep < 10 && mutations < 1000; ++rep) {
      Schedule s = sol.schedule;
      const int kind = mutations % 3;
      std::string name;
      if (kind == 0) {
        // Swap: trade a scheduled job for any other job, or exchange two jobs
        // between crews.
        name = "swap";
        const std::size_t c = pick(m);
        if (s.tours[c].empty()) continue;
        const std::size_t p = pick(s.tours[c].size());
        const std::size_t d = pick(m);
        if (!s.tours[d].empty() && d != c && pick(2) == 0) {
          std::swap(s.tours[c][p], s.tours[d][pick(s.tours[d].size())]);
        } else {
          s.tours[c][p] = static_cast<NodeIndex>(1 + pick(wg.graph.size() - 1));
        }
      } else if (kind == 1) {
        // Insert a job, preferring one that pushes the tour past its budget.
        name = "insert";
        const std::size_t c = pick(m);
        std::vector<NodeIndex> over;
        for (std::size_t j = 1; j < wg.graph.size(); ++j) {
          auto tour = s.tours[c];
          tour.push_back(static_cast<NodeIndex>(j));
          if (tour_time(wg.graph, tour) > crews.effective_budget(c) + 1e-9) over.push_back(static_cast<NodeIndex>(j));
        }
        const NodeIndex j = over.empty() ? static_cast<NodeIndex>(1 + pick(wg.graph.size() - 1)) : over[pick(over.size())];
        s.tours[c].insert(s.tours[c].begin() + static_cast<long>(pick(s.tours[c].size() + 1)), j);
      } else {
        // Remove a job whose descendant stays scheduled, if there is one.
        name = "ancestor";
        std::vector<NodeIndex> parents;
        for (const auto& a : wg.precedence.arcs())
          if (a.tail != 0 && in[a.tail] && in[a.head]) parents.push_back(a.tail);
        const NodeIndex victim = parents.empty() ? scheduled[pick(scheduled.size())] : parents[pick(parents.size())];
        for (auto& tour : s.tours) std::erase(tour, victim);
      }
      ++mutations;
      const auto want = inspect(wg.graph, wg.precedence, crews, s);
      const auto rep_ = check_schedule(wg.graph, wg.precedence, crews, s);
      std::set<ScheduleViolationKind> got;
      for (const auto& v : rep_.violations) got.insert(v.kind);
      if (!want.empty()) ++violating, ++by_kind[name];
      for (auto k : want) missed += !got.count(k);
      for (auto k : got) spurious += !want.count(k);
    }
  }
  const bool ok = missed == 0 && spurious == 0 && rejected_outputs == 0 && encoding_failures == 0;
  return {ok, std::to_string(mutations) + " mutations, " + std::to_string(violating) + " violating (swap " +
                  std::to_string(by_kind["swap"]) + ", insert " + std::to_string(by_kind["insert"]) +
                  ", ancestor " + std::to_string(by_kind["ancestor"]) + "), " + std::to_string(missed) +
                  " missed, " + std::to_string(spurious) + " spurious; " + std::to_string(solved) +
                  " solver outputs, " + std::to_string(rejected_outputs) + " rejected, " +
                  std::to_string(encoding_failures) + " encodings violate the model"};
}

// --- 9 -----------------------------------------------------------------------

Outcome relaxed_monotonicity() {
  std::mt19937_64 rng(909);
  int drops = 0;
  for (int trial = 0; trial < 50; ++trial) {
    testing::TreeOptions t;
    t.buses = std::uniform_int_distribution<int>(5, 11)(rng);
    t.max_damaged = 10;
    const auto inst = testing::random_radial(rng, t);
    const auto wg = testing::working_graphs(inst, std::uniform_real_distribution<double>(20.0, 200.0)(rng));
    const double budget = std::round(std::uniform_real_distribution<double>(20.0, 120.0)(rng));
    SolverOptions o;
    o.home_degree = HomeDegree::kRelaxed;
    double prev = -1;
    for (std::size_t m = 1; m <= 5; ++m) {
      const double ar = solve_exact(wg.graph, wg.precedence, CrewSpec::uniform(m, budget), o).aggregate_reward;
      drops += ar < prev;
      prev = ar;
    }
  }
  return {drops == 0, std::to_string(drops) + " decreases of AR(m+1) vs AR(m), m = 1..4, over 50 instances"};
}

// --- 10 ----------------------------------------------------------------------

Outcome thirty_four_bus() {
  const FeederData f = load_feeder(testing::data_path("feeders/ieee34.json"));
  DamagePlan plan;
  plan.seed = 34;
  const auto net = apply_damage(f.network, sample_repair_times(f.network, plan));
  const auto wg = build_working_graphs(net, f.transport, f.energized, 4740.0);
  const CrewSpec crews = CrewSpec::uniform(2, 180.0);
  SolverOptions o;
  SearchLimits lim;
  lim.time_limit_s = 600.0;
  const auto t0 = Clock::now();
  const auto s = solve_exact(wg.graph, wg.precedence, crews, o, lim);
  const double secs = seconds_since(t0);
  const bool checked = s.has_schedule() && check_schedule(wg.graph, wg.precedence, crews, s.schedule).ok();
  const bool ok = checked && s.lb <= s.ub && std::isfinite(s.ub) && s.aggregate_reward == s.lb;
  return {ok, std::to_string(wg.graph.size() - 1) + " jobs; status " + to_string(s.status) + ", LB " +
                  fmt("%.0f", s.lb) + ", UB " + fmt("%.3f", s.ub) + ", gap " + fmt("%.3f", s.gap()) +
                  ", LB schedule " + (checked ? "passes" : "fails") + " the checker, " + fmt("%.2f s", secs)};
}

// --- 11 ----------------------------------------------------------------------

Outcome travel_ranges() {
  const auto within = [](double got, double want) { return std::abs(got - want) <= 0.01 * want; };
  const FeederData f13 = load_feeder(testing::data_path("feeders/ieee13.json"));
  const FeederData f34 = load_feeder(testing::data_path("feeders/ieee34.json"));
  const auto t13 = travel_time_matrix(f13.network, f13.transport, 141.0);
  const auto t34 = travel_time_matrix(f34.network, f34.transport, 4740.0);
  const bool ok = within(t13.min(), 0.0071) && within(t13.max(), 36.17) && within(t34.min(), 0.00021) &&
                  within(t34.max(), 40.825);
  return {ok, "13-bus [" + fmt("%.5f", t13.min()) + ", " + fmt("%.3f", t13.max()) + "] vs [0.0071, 36.17]; 34-bus [" +
                  fmt("%.6f", t34.min()) + ", " + fmt("%.3f", t34.max()) + "] vs [0.00021, 40.825]"};
}

}  // namespace

int main() {
  report(1, "exact search equals brute force on 200 random instances", oracle_equivalence);
  report(2, "four-bus chain, three crews with budgets 30/20/30", four_bus_chain);
  report(3, "star networks need no precedence rows", star_reduction);
  report(4, "collapse of undamaged lines", collapse_correctness);
  report(5, "13-bus, 4 crews, 60 min, mean repair 47..66", thirteen_bus_short_budget);
  report(6, "13-bus, 4 crews, 360 min, mean repair 47.7", thirteen_bus_long_budget);
  report(7, "model structure counts", structural_counts);
  report(8, "schedule checker soundness", checker_soundness);
  report(9, "relaxed-mode monotonicity in crews", relaxed_monotonicity);
  report(10, "34-bus, 2 crews, 180 min, 10 min limit", thirty_four_bus);
  report(11, "travel-time ranges of the 13-bus and 34-bus feeders", travel_ranges);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

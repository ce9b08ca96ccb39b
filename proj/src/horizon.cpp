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

#include "gridrestore/horizon.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "gridrestore/error.hpp"
#include "gridrestore/feeders.hpp"
#include "gridrestore/metrics.hpp"
#include "gridrestore/transform.hpp"
#include "json_support.hpp"

namespace gridrestore {
namespace {

constexpr double kEps = 1e-9;

std::vector<BusId> initial_region(const Scenario& s) {
  std::vector<BusId> r = s.energized.empty() ? std::vector<BusId>{s.network.source()} : s.energized;
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

// Grows `region` through every line not in `broken`.
std::vector<BusId> energize(const DistributionNetwork& net, const std::vector<BusId>& region,
                            const std::set<std::size_t>& broken) {
  std::set<BusId> live(region.begin(), region.end());
  std::vector<std::vector<std::pair<BusId, std::size_t>>> adj(net.buses().size());
  for (std::size_t i = 0; i < net.lines().size(); ++i) {
    const Line& l = net.lines()[i];
    adj[net.bus_index(l.from)].emplace_back(l.to, i);
    adj[net.bus_index(l.to)].emplace_back(l.from, i);
  }
  std::vector<BusId> frontier(region.begin(), region.end());
  while (!frontier.empty()) {
    const BusId b = frontier.back();
    frontier.pop_back();
    for (auto [next, line] : adj[net.bus_index(b)]) {
      if (broken.count(line) || live.count(next)) continue;
      live.insert(next);
      frontier.push_back(next);
    }
  }
  return {live.begin(), live.end()};
}

}  // namespace

void validate_scenario(const Scenario& s) {
  const ValidationReport report = validate_radial(s.network);
  if (!report.ok()) throw Error(ErrorCode::kTopology, "scenario network is not radial");
  if (!(s.speed > 0.0) || !std::isfinite(s.speed))
    throw Error(ErrorCode::kInvalidArgument, "travel speed must be positive");
  for (std::size_t k = 0; k < s.windows.size(); ++k) {
    if (!(s.windows[k].length_min > 0.0))
      throw Error(ErrorCode::kInvalidArgument, "window " + std::to_string(k) + " has a non-positive length");
    for (double b : s.windows[k].budgets)
      if (!(b > 0.0))
        throw Error(ErrorCode::kInvalidArgument, "window " + std::to_string(k) + " has a non-positive budget");
  }
  const std::vector<BusId> region = initial_region(s);
  for (BusId b : region)
    if (!s.network.has_bus(b)) throw Error(ErrorCode::kInvalidArgument, "energized bus " + std::to_string(b) + " is not on the network");
  const std::set<BusId> live(region.begin(), region.end());
  std::set<std::size_t> seen;
  for (const Arrival& a : s.arrivals) {
    const std::size_t line = s.network.find_line(a.from, a.to);
    const std::string name = "(" + std::to_string(a.from) + ", " + std::to_string(a.to) + ")";
    if (line == DistributionNetwork::npos)
      throw Error(ErrorCode::kInvalidArgument, "arrival on unknown line " + name);
    if (a.window >= s.windows.size())
      throw Error(ErrorCode::kInvalidArgument, "arrival " + name + " comes after the last window");
    if (!seen.insert(line).second) throw Error(ErrorCode::kInvalidArgument, "line " + name + " arrives twice");
    if (live.count(a.from) && live.count(a.to))
      throw Error(ErrorCode::kInvalidArgument, "arrival " + name + " lies inside the energized region");
    if (!(a.repair_min > 0.0) || !std::isfinite(a.repair_min))
      throw Error(ErrorCode::kInvalidArgument, "arrival " + name + " needs a positive repair time");
    if (a.actual_min && !(*a.actual_min > 0.0))
      throw Error(ErrorCode::kInvalidArgument, "arrival " + name + " needs a positive actual time");
    if (a.reward < 0.0 || a.penalty < 0.0)
      throw Error(ErrorCode::kInvalidArgument, "arrival " + name + " has a negative reward or penalty");
  }
  for (BusId b : s.network.buses())
    if (!s.transport.has_bus(b))
      throw Error(ErrorCode::kUnreachable, "bus " + std::to_string(b) + " is not on the transport graph");
  apsp(s.transport);  // throws on an unreachable pair
}

namespace {

Scenario scenario_from_json(const detail::json& doc, const std::string& origin, const std::string& base_dir) {
  using detail::json;
  if (!doc.is_object()) detail::schema_error(origin, "expected a JSON object");

  Scenario s;
  FeederData feeder;
  if (doc.contains("network")) {
    feeder = detail::feeder_from_json(doc["network"], origin);
  } else if (doc.contains("feeder")) {
    std::filesystem::path p = doc["feeder"].get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    feeder = load_feeder(p.string());
  } else {
    detail::schema_error(origin, "needs 'network' or 'feeder'");
  }
  if (feeder.annotated) detail::schema_error(origin, "scenario damage must come from 'arrivals'");
  s.network = feeder.network;
  s.transport = feeder.transport;
  s.energized = feeder.energized;
  if (doc.contains("energized")) {
    s.energized.clear();
    for (const json& b : doc["energized"]) s.energized.push_back(detail::bus_value(b, origin));
  }
  s.speed = detail::number_field(doc, "speed", 1.0, origin);
  s.seed = doc.value("seed", std::uint64_t{1});

  if (doc.contains("windows"))
    for (const json& w : doc["windows"]) {
      WindowSpec spec;
      spec.length_min = detail::number_field(w, "length_min", origin);
      if (w.contains("budgets"))
        for (const json& b : w["budgets"]) spec.budgets.push_back(b.get<double>());
      s.windows.push_back(std::move(spec));
    }

  WeibullLaw law{2.0, 0.0, 30.0};
  bool have_law = false;
  if (doc.contains("repair_law")) {
    const json& l = doc["repair_law"];
    law.shape = detail::number_field(l, "shape", 2.0, origin);
    law.floor = detail::number_field(l, "floor", 30.0, origin);
    law.scale = calibrate_scale(law.shape, law.floor, detail::number_field(l, "mean", origin));
    have_law = true;
  }
  if (doc.contains("arrivals")) {
    std::uint64_t index = 0;
    for (const json& a : doc["arrivals"]) {
      Arrival arr;
      arr.window = a.value("window", std::size_t{0});
      if (!a.contains("line") || !a["line"].is_array() || a["line"].size() != 2)
        detail::schema_error(origin, "arrival needs 'line': [from, to]");
      arr.from = detail::bus_value(a["line"][0], origin);
      arr.to = detail::bus_value(a["line"][1], origin);
      if (a.contains("repair_min")) {
        arr.repair_min = detail::number_field(a, "repair_min", origin);
      } else {
        if (!have_law) detail::schema_error(origin, "arrival without 'repair_min' needs a 'repair_law'");
        SplitMix64 rng = SplitMix64::derive(s.seed, {index});
        arr.repair_min = sample_repair_times(law, 1, rng).front();
      }
      arr.reward = detail::number_field(a, "reward", 1.0, origin);
      arr.penalty = detail::number_field(a, "penalty", 0.0, origin);
      if (a.contains("actual_min")) arr.actual_min = detail::number_field(a, "actual_min", origin);
      s.arrivals.push_back(arr);
      ++index;
    }
  }

  if (doc.contains("options")) s.options = detail::solver_options_from_json(doc["options"], origin);
  if (doc.contains("limits")) s.limits = detail::limits_from_json(doc["limits"], origin);
  return s;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin, const std::string& base_dir) {
  const detail::json doc = detail::parse_json(text, origin);
  Scenario s;
  try {
    s = scenario_from_json(doc, origin, base_dir);
  } catch (const detail::json::exception& e) {
    detail::schema_error(origin, e.what());
  }
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  const std::filesystem::path p(path);
  return parse_scenario(detail::read_text(path), path, p.parent_path().empty() ? "." : p.parent_path().string());
}

RestorationState initial_state(const Scenario& s) {
  RestorationState st;
  st.energized = initial_region(s);
  for (const Arrival& a : s.arrivals)
    if (a.window == 0) {
      const std::size_t line = s.network.find_line(a.from, a.to);
      st.pending.push_back({line, a.repair_min, a.actual_min.value_or(a.repair_min), a.reward, a.penalty, false});
    }
  return st;
}

WindowResult run_window(const RestorationState& state, const Scenario& s) {
  const std::size_t k = state.window;
  if (k >= s.windows.size()) throw Error(ErrorCode::kInvalidArgument, "no window " + std::to_string(k));
  const WindowSpec& spec = s.windows[k];

  WindowResult out;
  out.window = k;
  std::map<std::size_t, std::size_t> pending_of;  // line -> index into state.pending
  for (std::size_t i = 0; i < state.pending.size(); ++i) pending_of[state.pending[i].line] = i;

  std::vector<PendingJob> jobs = state.pending;
  std::set<std::size_t> completed;

  if (state.pending.empty() || spec.budgets.empty()) {
    out.trivial = true;
    out.plan.status = SolveStatus::kOptimal;
    out.plan.lb = out.plan.ub = out.plan.objective = 0.0;
  } else {
    std::vector<Line> lines = s.network.lines();
    for (Line& l : lines) {
      l.damaged = false;
      l.repair_minutes = l.reward = l.penalty = 0.0;
    }
    for (const PendingJob& j : state.pending) {
      Line& l = lines[j.line];
      l.damaged = true;
      l.repair_minutes = j.repaired ? 0.0 : j.estimate;
      l.reward = j.reward;
      l.penalty = j.penalty;
    }
    const DistributionNetwork net(s.network.sources(), std::move(lines), s.network.buses());
    const WorkingGraphs wg = build_working_graphs(net, s.transport, state.energized, s.speed);
    const CrewSpec crews(spec.budgets, spec.length_min);
    out.plan = solve_exact(wg.graph, wg.precedence, crews, s.options, s.limits);
    if (!out.plan.has_schedule())
      throw Error(ErrorCode::kInfeasible, "window " + std::to_string(k) + ": no feasible schedule (" +
                                              to_string(out.plan.status) + ")");

    for (std::size_t c = 0; c < out.plan.schedule.tours.size(); ++c) {
      const auto& tour = out.plan.schedule.tours[c];
      std::vector<std::size_t> planned;
      for (NodeIndex node : tour) planned.push_back(wg.jobs.line_of(node).line);
      out.planned_lines.push_back(planned);

      // Sequential execution with true durations.
      const double budget = crews.effective_budget(c);
      double t = 0.0;
      for (std::size_t p = 0; p < tour.size(); ++p) {
        if (p > 0) t += wg.graph.travel(tour[p - 1], tour[p]);
        PendingJob& job = jobs[pending_of.at(planned[p])];
        const double work = job.repaired ? 0.0 : job.actual;
        if (work > 0.0 && t >= budget - kEps) break;
        if (t + work <= budget + kEps) {
          out.executed.push_back({c, job.line, t, t + work, true, 0.0});
          t += work;
          completed.insert(job.line);
          continue;
        }
        const double done = budget - t;
        const double residual = work - done;
        out.executed.push_back({c, job.line, t, budget, false, residual});
        job.actual = residual;
        job.estimate = residual;
        break;
      }
    }
  }

  std::set<std::size_t> repaired(state.repaired_lines.begin(), state.repaired_lines.end());
  repaired.insert(completed.begin(), completed.end());
  std::set<std::size_t> broken;
  for (const Arrival& a : s.arrivals) {
    const std::size_t line = s.network.find_line(a.from, a.to);
    if (!repaired.count(line)) broken.insert(line);
  }
  out.energized_buses = energize(s.network, state.energized, broken);
  const std::set<BusId> live(out.energized_buses.begin(), out.energized_buses.end());

  for (PendingJob& job : jobs) {
    const Line& l = s.network.lines()[job.line];
    if (completed.count(job.line)) {
      out.completed.push_back(job.line);
      job.repaired = true;
    }
    if (job.repaired && live.count(l.from) && live.count(l.to)) {
      out.energized.push_back(job.line);
      out.reward += job.reward;
      continue;
    }
    if (job.repaired) job.estimate = job.actual = 0.0;
    out.carried.push_back(job);
  }
  std::sort(out.completed.begin(), out.completed.end());
  std::sort(out.energized.begin(), out.energized.end());
  return out;
}

RestorationState advance(const RestorationState& state, const WindowResult& result, const Scenario& s) {
  RestorationState next;
  next.window = state.window + 1;
  next.energized = result.energized_buses;
  next.pending = result.carried;
  for (const Arrival& a : s.arrivals)
    if (a.window == next.window)
      next.pending.push_back({s.network.find_line(a.from, a.to), a.repair_min,
                              a.actual_min.value_or(a.repair_min), a.reward, a.penalty, false});
  std::set<std::size_t> repaired(state.repaired_lines.begin(), state.repaired_lines.end());
  repaired.insert(result.completed.begin(), result.completed.end());
  next.repaired_lines.assign(repaired.begin(), repaired.end());
  next.cumulative_reward = state.cumulative_reward + result.reward;
  return next;
}

Timeline simulate(const Scenario& s) {
  Timeline tl;
  RestorationState state = initial_state(s);
  for (std::size_t k = 0; k < s.windows.size(); ++k) {
    const bool later = std::any_of(s.arrivals.begin(), s.arrivals.end(),
                                   [k](const Arrival& a) { return a.window > k; });
    if (state.pending.empty() && !later) break;
    WindowResult r = run_window(state, s);
    state = advance(state, r, s);
    tl.windows.push_back(std::move(r));
    tl.cumulative_reward.push_back(state.cumulative_reward);
  }
  return tl;
}

std::string timeline_csv(const Scenario& s, const Timeline& tl) {
  std::ostringstream os;
  os << "window,event,crew,from,to,start_min,end_min,residual_min,reward,cumulative_reward\n";
  for (std::size_t w = 0; w < tl.windows.size(); ++w) {
    const WindowResult& r = tl.windows[w];
    for (const ExecutedJob& e : r.executed) {
      const Line& l = s.network.lines()[e.line];
      os << r.window << "," << (e.completed ? "completed" : "carried") << "," << e.crew << "," << l.from
         << "," << l.to << "," << format_fixed(e.start) << "," << format_fixed(e.end) << ","
         << format_fixed(e.residual) << ",,\n";
    }
    for (std::size_t line : r.energized) {
      const Line& l = s.network.lines()[line];
      const auto it = std::find_if(s.arrivals.begin(), s.arrivals.end(), [&](const Arrival& a) {
        return s.network.find_line(a.from, a.to) == line;
      });
      os << r.window << ",energized,," << l.from << "," << l.to << ",,,," << format_fixed(it->reward) << ",\n";
    }
    os << r.window << ",window,,,,,,," << format_fixed(r.reward) << "," << format_fixed(tl.cumulative_reward[w])
       << "\n";
  }
  return os.str();
}

}  // namespace gridrestore

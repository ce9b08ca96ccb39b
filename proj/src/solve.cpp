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

#include "gridrestore/solve.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "gridrestore/error.hpp"

namespace gridrestore {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = 1e-9;
constexpr std::size_t kMaxNodes = 256;

using JobSet = std::bitset<kMaxNodes>;

double job_value(const WorkingGraph& gw, std::size_t j, Objective objective) {
  return objective == Objective::kProfit ? gw.reward(j) + gw.penalty(j) : gw.reward(j);
}

double objective_offset(const WorkingGraph& gw, Objective objective, std::size_t crews) {
  if (objective != Objective::kProfit) return 0.0;
  double p = 0.0;
  for (std::size_t i = 1; i < gw.size(); ++i) p += gw.penalty(i);
  return -p * static_cast<double>(crews);
}

bool allows_empty(HomeDegree mode) { return mode != HomeDegree::kStrict; }

void fill_solution(const WorkingGraph& gw, const CrewSpec& crews, Objective objective,
                   Solution& sol) {
  sol.objective = objective_value(gw, sol.schedule, objective, crews.size());
  sol.aggregate_reward = aggregate_reward(gw, sol.schedule);
  sol.spent.clear();
  for (const auto& t : sol.schedule.tours) sol.spent.push_back(tour_time(gw, t));
}

}  // namespace

bool ScheduleReport::has(ScheduleViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const ScheduleViolation& v) { return v.kind == kind; });
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kLimit: return "limit";
  }
  return "limit";
}

ScheduleReport check_schedule(const WorkingGraph& gw, const PrecedenceDag& gwd,
                              const CrewSpec& crews, const Schedule& schedule) {
  if (schedule.tours.size() != crews.size())
    throw Error(ErrorCode::kInvalidArgument,
                "schedule has " + std::to_string(schedule.tours.size()) + " crews, expected " +
                    std::to_string(crews.size()));
  const auto n = static_cast<NodeIndex>(gw.size());
  for (const auto& tour : schedule.tours)
    for (NodeIndex j : tour)
      if (j <= 0 || j >= n) throw Error(ErrorCode::kInvalidArgument, "unknown job " + std::to_string(j));

  ScheduleReport report;
  auto add = [&report](ScheduleViolationKind kind, std::size_t crew, NodeIndex job, std::string detail) {
    if (!report.has(kind)) report.violations.push_back({kind, crew, job, std::move(detail)});
  };

  std::vector<int> owner(gw.size(), -1);
  for (std::size_t c = 0; c < schedule.tours.size(); ++c) {
    const auto& tour = schedule.tours[c];
    const double spent = tour_time(gw, tour);
    report.spent.push_back(spent);
    if (spent > crews.effective_budget(c) + kEps)
      add(ScheduleViolationKind::kBudget, c, tour.empty() ? 0 : tour.back(),
          "crew " + std::to_string(c) + " needs " + std::to_string(spent) + " min, budget " +
              std::to_string(crews.effective_budget(c)));
    for (NodeIndex j : tour) {
      if (owner[j] >= 0) {
        add(ScheduleViolationKind::kDuplicate, c, j, "job " + std::to_string(j) + " scheduled twice");
        continue;
      }
      owner[j] = static_cast<int>(c);
      report.aggregate_reward += gw.reward(j);
    }
  }
  for (const PrecedenceArc& a : gwd.arcs()) {
    if (owner[a.head] < 0 || a.tail == 0 || owner[a.tail] >= 0) continue;
    add(ScheduleViolationKind::kContinuity, static_cast<std::size_t>(owner[a.head]), a.head,
        "job " + std::to_string(a.head) + " needs job " + std::to_string(a.tail));
  }
  return report;
}

Solution solve_bruteforce(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                          const SolverOptions& options, std::size_t max_jobs) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t k = gw.size() - 1;
  if (k > max_jobs)
    throw Error(ErrorCode::kTooLarge,
                "brute force supports at most " + std::to_string(max_jobs) + " jobs, got " + std::to_string(k));
  const std::size_t m = crews.size();

  // Cheapest visiting order for every job subset, by full enumeration.
  const std::size_t subsets = std::size_t{1} << k;
  std::vector<double> best_cost(subsets, kInf);
  std::vector<std::vector<NodeIndex>> best_order(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<NodeIndex> order;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) order.push_back(static_cast<NodeIndex>(b + 1));
    do {
      const double cost = tour_time(gw, order);
      if (cost < best_cost[mask]) {
        best_cost[mask] = cost;
        best_order[mask] = order;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }

  Solution sol;
  double best = -kInf;
  std::vector<std::size_t> assign(k, 0);  // 0: unassigned, c+1: crew c
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= m + 1;
  std::uint64_t visited = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    std::vector<std::size_t> masks(m, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t a = rest % (m + 1);
      rest /= m + 1;
      if (a > 0) masks[a - 1] |= std::size_t{1} << i;
    }
    ++visited;
    bool ok = true;
    for (std::size_t c = 0; c < m && ok; ++c) {
      if (masks[c] == 0 && !allows_empty(options.home_degree)) ok = false;
      if (best_cost[masks[c]] > crews.effective_budget(c) + kEps) ok = false;
    }
    if (!ok) continue;
    Schedule s;
    for (std::size_t c = 0; c < m; ++c) s.tours.push_back(best_order[masks[c]]);
    if (!check_schedule(gw, gwd, crews, s).ok()) continue;
    const double value = objective_value(gw, s, options.objective, m);
    if (value > best) {
      best = value;
      sol.schedule = std::move(s);
    }
  }

  sol.stats.nodes = visited;
  sol.stats.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (best == -kInf) {
    sol.status = SolveStatus::kInfeasible;
    sol.ub = -kInf;
    return sol;
  }
  fill_solution(gw, crews, options.objective, sol);
  sol.lb = sol.ub = sol.objective;
  sol.status = SolveStatus::kOptimal;
  return sol;
}

namespace {

struct MemoKey {
  JobSet set;
  int crew;
  int last;
  int first;
  int tag;

  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = std::hash<JobSet>{}(k.set);
    for (int v : {k.crew, k.last, k.first, k.tag})
      h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Search {
 public:
  Search(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
         const SolverOptions& options, const SearchLimits& limits)
      : gw_(gw), crews_(crews), options_(options), limits_(limits),
        n_(gw.size()), m_(crews.size()) {
    if (n_ > kMaxNodes)
      throw Error(ErrorCode::kTooLarge, "the exact solver supports at most " +
                                            std::to_string(kMaxNodes - 1) + " jobs");
    if (gwd.node_count() != n_)
      throw Error(ErrorCode::kInvalidArgument, "precedence dag does not match the working graph");
    for (std::size_t j = 1; j < n_; ++j)
      if (!gw.damaged(j))
        throw Error(ErrorCode::kInvalidArgument, "working graph must be collapsed before solving");

    value_.resize(n_);
    for (std::size_t j = 1; j < n_; ++j) value_[j] = job_value(gw, j, options.objective);

    // Transitive non-root ancestors.
    ancestors_.assign(n_, JobSet{});
    std::vector<std::vector<NodeIndex>> preds(n_);
    for (const PrecedenceArc& a : gwd.arcs()) preds[a.head].push_back(a.tail);
    std::vector<int> state(n_, 0);
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
      if (state[v] == 2) return;
      state[v] = 2;
      for (NodeIndex p : preds[v]) {
        if (p == 0) continue;
        visit(p);
        ancestors_[v].set(p);
        ancestors_[v] |= ancestors_[p];
      }
    };
    for (std::size_t v = 1; v < n_; ++v) visit(v);

    delta_.assign(n_, 0.0);
    for (std::size_t j = 1; j < n_; ++j) {
      double d = kInf;
      for (std::size_t i = 1; i < n_; ++i)
        if (i != j) d = std::min(d, gw.travel(i, j));
      delta_[j] = std::isfinite(d) ? d : 0.0;
      max_delta_ = std::max(max_delta_, delta_[j]);
    }

    for (std::size_t j = 1; j < n_; ++j) candidates_.push_back(static_cast<NodeIndex>(j));
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [this](NodeIndex a, NodeIndex b) { return value_[a] > value_[b]; });
    by_ratio_ = candidates_;
    auto ratio = [this](NodeIndex j) {
      const double wt = gw_.repair(j) + delta_[j];
      return wt <= 0.0 ? kInf : value_[j] / wt;
    };
    std::stable_sort(by_ratio_.begin(), by_ratio_.end(),
                     [&](NodeIndex a, NodeIndex b) { return ratio(a) > ratio(b); });

    budget_.resize(m_);
    for (std::size_t c = 0; c < m_; ++c) budget_[c] = crews.effective_budget(c);
    suffix_sum_.assign(m_ + 1, 0.0);
    suffix_max_.assign(m_ + 1, 0.0);
    for (std::size_t c = m_; c-- > 0;) {
      suffix_sum_[c] = suffix_sum_[c + 1] + budget_[c];
      suffix_max_[c] = std::max(suffix_max_[c + 1], budget_[c]);
    }
    sym_prev_.assign(m_, false);
    if (options.symmetry_breaking)
      for (std::size_t c = 1; c < m_; ++c) sym_prev_[c] = budget_[c] == budget_[c - 1];

    offset_ = objective_offset(gw, options.objective, m_);
    tours_.assign(m_, {});
  }

  // Places the search at `partial` without validating search-order rules.
  bool seek(const PartialSchedule& partial) {
    if (partial.closed.size() > m_ || (partial.closed.size() == m_ && !partial.open.empty()))
      throw Error(ErrorCode::kInvalidArgument, "partial schedule has too many crews");
    for (std::size_t c = 0; c < partial.closed.size(); ++c) tours_[c] = partial.closed[c];
    crew_ = partial.closed.size();
    if (crew_ < m_) tours_[crew_] = partial.open;
    set_.reset();
    earned_ = 0.0;
    for (std::size_t c = 0; c <= crew_ && c < m_; ++c)
      for (NodeIndex j : tours_[c]) {
        if (j <= 0 || static_cast<std::size_t>(j) >= n_)
          throw Error(ErrorCode::kInvalidArgument, "unknown job " + std::to_string(j));
        if (set_.test(j)) return false;
        set_.set(j);
        earned_ += value_[j];
      }
    for (std::size_t c = 0; c < partial.closed.size(); ++c)
      if (tour_time(gw_, tours_[c]) > budget_[c] + kEps) return false;
    spent_ = crew_ < m_ ? tour_time(gw_, tours_[crew_]) : 0.0;
    return crew_ == m_ || spent_ <= budget_[crew_] + kEps;
  }

  double bound() const {
    JobSet required;
    for (std::size_t j = 1; j < n_; ++j)
      if (set_.test(j)) required |= ancestors_[j];
    required &= ~set_;
    if (crew_ >= m_) return required.none() ? earned_ : -kInf;

    const auto& open = tours_[crew_];
    const double rem = budget_[crew_] - spent_;
    const double later_max = suffix_max_[crew_ + 1];
    const std::size_t unstarted = (m_ - crew_ - 1) + (open.empty() ? 1 : 0);
    double cap = rem + suffix_sum_[crew_ + 1] + static_cast<double>(unstarted) * max_delta_;
    auto fittable = [&](NodeIndex j) {
      const double lead = open.empty() ? 0.0 : gw_.travel(open.back(), j);
      return gw_.repair(j) + lead <= rem + kEps || gw_.repair(j) <= later_max + kEps;
    };

    double value = earned_;
    for (std::size_t j = 1; j < n_; ++j) {
      if (!required.test(j)) continue;
      if (!fittable(static_cast<NodeIndex>(j))) return -kInf;
      cap -= gw_.repair(j) + delta_[j];
      value += value_[j];
    }
    if (cap < -kEps) return -kInf;
    cap = std::max(cap, 0.0);
    for (NodeIndex j : by_ratio_) {
      if (set_.test(j) || required.test(j) || !fittable(j)) continue;
      const double wt = gw_.repair(j) + delta_[j];
      if (wt <= cap) {
        cap -= wt;
        value += value_[j];
      } else {
        value += value_[j] * cap / wt;
        break;
      }
    }
    return value;
  }

  double offset() const { return offset_; }

  Solution run() {
    start_ = std::chrono::steady_clock::now();
    if (allows_empty(options_.home_degree)) {
      incumbent_ = 0.0;
      best_tours_.assign(m_, {});
      have_incumbent_ = true;
    }
    crew_ = 0;
    prev_first_ = -1;
    dfs();

    Solution sol;
    sol.stats.nodes = nodes_;
    sol.stats.memo_hits = memo_hits_;
    sol.stats.elapsed_s = elapsed();
    double ub = std::max(pruned_ub_, open_ub_);
    if (have_incumbent_) {
      sol.schedule.tours = best_tours_;
      fill_solution(gw_, crews_, options_.objective, sol);
      sol.lb = sol.objective;
      ub = std::max(ub, incumbent_);
      sol.ub = ub + offset_;
      if (aborted_)
        sol.status = SolveStatus::kLimit;
      else
        sol.status = sol.ub - sol.lb <= kEps ? SolveStatus::kOptimal : SolveStatus::kFeasible;
      if (sol.status == SolveStatus::kOptimal) sol.ub = sol.lb;
    } else if (aborted_) {
      sol.status = SolveStatus::kLimit;
      sol.ub = ub + offset_;
    } else {
      sol.status = SolveStatus::kInfeasible;
      sol.ub = -kInf;
    }
    return sol;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool out_of_budget() {
    if (aborted_) return true;
    if (limits_.node_limit != 0 && nodes_ >= limits_.node_limit) aborted_ = true;
    if ((nodes_ & 255) == 0 && std::isfinite(limits_.time_limit_s) && elapsed() >= limits_.time_limit_s)
      aborted_ = true;
    return aborted_;
  }

  double prune_level() const {
    if (!have_incumbent_) return -kInf;
    const double tol = std::max({kEps, limits_.abs_gap, limits_.rel_gap * std::abs(incumbent_ + offset_)});
    return incumbent_ + tol;
  }

  bool memo_seen() {
    if (!options_.memoize) return false;
    const auto& open = tours_[crew_];
    MemoKey key{set_, static_cast<int>(crew_), open.empty() ? -1 : open.back(),
                open.empty() ? -1 : open.front(),
                open.empty() && sym_prev_[crew_] ? prev_first_ : -3};
    const double rem = budget_[crew_] - spent_;
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (it->second >= rem - kEps) {
        ++memo_hits_;
        return true;
      }
      it->second = rem;
      return false;
    }
    if (memo_.size() < options_.memo_capacity) memo_.emplace(key, rem);
    return false;
  }

  bool may_extend(NodeIndex j) const {
    if (set_.test(j)) return false;
    const auto& open = tours_[crew_];
    // Equal-budget neighbours: first jobs increase, empty crews come last.
    if (open.empty() && sym_prev_[crew_] && (prev_first_ < 0 || j <= prev_first_)) return false;
    const double lead = open.empty() ? 0.0 : gw_.travel(open.back(), j);
    const double rem = budget_[crew_] - spent_;
    if (gw_.repair(j) + lead > rem + kEps) return false;
    // Unscheduled ancestors must still fit somewhere.
    const JobSet missing = ancestors_[j] & ~set_;
    if (missing.any()) {
      double need = gw_.repair(j) + lead;
      for (std::size_t a = 1; a < n_; ++a)
        if (missing.test(a)) need += gw_.repair(a);
      if (need > rem + suffix_sum_[crew_ + 1] + kEps) return false;
    }
    return true;
  }

  bool may_close() const {
    const auto& open = tours_[crew_];
    if (open.empty()) return allows_empty(options_.home_degree);
    return !(options_.symmetry_breaking && open.size() >= 2 && open.front() > open.back());
  }

  void push(NodeIndex j) {
    auto& open = tours_[crew_];
    saved_spent_.push_back(spent_);
    spent_ += gw_.repair(j) + (open.empty() ? 0.0 : gw_.travel(open.back(), j));
    open.push_back(j);
    set_.set(j);
    earned_ += value_[j];
  }

  void pop() {
    auto& open = tours_[crew_];
    const NodeIndex j = open.back();
    open.pop_back();
    set_.reset(j);
    earned_ -= value_[j];
    spent_ = saved_spent_.back();
    saved_spent_.pop_back();
  }

  // Closes the current crew; returns the state needed to reopen it.
  std::pair<double, int> close() {
    const std::pair<double, int> saved{spent_, prev_first_};
    prev_first_ = tours_[crew_].empty() ? -1 : tours_[crew_].front();
    ++crew_;
    spent_ = 0.0;
    return saved;
  }

  void reopen(std::pair<double, int> saved) {
    --crew_;
    spent_ = saved.first;
    prev_first_ = saved.second;
  }

  void record_leaf() {
    // Continuity closure: bound() returns earned_ only when it holds.
    const double value = bound();
    if (value == -kInf) return;
    if (!have_incumbent_ || value > incumbent_) {
      incumbent_ = value;
      best_tours_ = tours_;
      have_incumbent_ = true;
    }
  }

  void dfs() {
    ++nodes_;
    if (out_of_budget()) {
      open_ub_ = std::max(open_ub_, bound());
      return;
    }
    if (crew_ == m_) {
      record_leaf();
      return;
    }
    const double b = bound();
    if (b == -kInf) return;
    if (b <= prune_level()) {
      if (have_incumbent_ && b > incumbent_ + kEps) pruned_ub_ = std::max(pruned_ub_, b);
      return;
    }
    if (memo_seen()) return;

    for (NodeIndex j : candidates_) {
      if (!may_extend(j)) continue;
      push(j);
      if (aborted_)
        open_ub_ = std::max(open_ub_, bound());
      else
        dfs();
      pop();
    }
    if (may_close()) {
      const auto saved = close();
      if (aborted_)
        open_ub_ = std::max(open_ub_, bound());
      else
        dfs();
      reopen(saved);
    }
  }

  const WorkingGraph& gw_;
  const CrewSpec& crews_;
  SolverOptions options_;
  SearchLimits limits_;
  std::size_t n_;
  std::size_t m_;

  std::vector<double> value_;
  std::vector<JobSet> ancestors_;
  std::vector<double> delta_;
  double max_delta_ = 0.0;
  std::vector<NodeIndex> candidates_;
  std::vector<NodeIndex> by_ratio_;
  std::vector<double> budget_;
  std::vector<double> suffix_sum_;
  std::vector<double> suffix_max_;
  std::vector<bool> sym_prev_;
  double offset_ = 0.0;

  std::vector<std::vector<NodeIndex>> tours_;
  std::size_t crew_ = 0;
  double spent_ = 0.0;
  int prev_first_ = -1;
  JobSet set_;
  double earned_ = 0.0;
  std::vector<double> saved_spent_;

  bool have_incumbent_ = false;
  double incumbent_ = -kInf;
  std::vector<std::vector<NodeIndex>> best_tours_;
  double pruned_ub_ = -kInf;
  double open_ub_ = -kInf;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t memo_hits_ = 0;
  std::unordered_map<MemoKey, double, MemoHash> memo_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Solution solve_exact(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                     const SolverOptions& options, const SearchLimits& limits) {
  if (limits.time_limit_s < 0 || limits.abs_gap < 0 || limits.rel_gap < 0)
    throw Error(ErrorCode::kInvalidArgument, "search limits must be non-negative");
  Search search(gw, gwd, crews, options, limits);
  return search.run();
}

double completion_bound(const WorkingGraph& gw, const PrecedenceDag& gwd, const CrewSpec& crews,
                        const SolverOptions& options, const PartialSchedule& partial) {
  Search search(gw, gwd, crews, options, {});
  if (!search.seek(partial)) return -kInf;
  const double b = search.bound();
  return b == -kInf ? b : b + search.offset();
}

}  // namespace gridrestore

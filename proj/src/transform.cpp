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

#include "gridrestore/transform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>

#include "gridrestore/error.hpp"

namespace gridrestore {

bool SquareMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

DistanceTable apsp(const TransportGraph& transport) {
  const std::size_t n = transport.buses().size();
  DistanceTable table;
  table.buses = transport.buses();
  for (std::size_t i = 0; i < n; ++i) table.index.emplace(table.buses[i], i);

  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const Road& r : transport.roads()) {
    const std::size_t a = transport.bus_index(r.from);
    const std::size_t b = transport.bus_index(r.to);
    adj[a].emplace_back(b, r.length_ft);
    adj[b].emplace_back(a, r.length_ft);
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  table.feet = SquareMatrix(n, kInf);
  using Entry = std::pair<double, std::size_t>;
  for (std::size_t s = 0; s < n; ++s) {
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    table.feet(s, s) = 0.0;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > table.feet(s, u)) continue;
      for (auto [v, len] : adj[u]) {
        if (d + len < table.feet(s, v)) {
          table.feet(s, v) = d + len;
          heap.emplace(d + len, v);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (table.feet(s, t) == kInf)
        throw Error(ErrorCode::kUnreachable,
                    "bus " + std::to_string(table.buses[t]) + " is unreachable from bus " +
                        std::to_string(table.buses[s]));
    }
  }
  // Dijkstra sums edges in different orders from each end; pin symmetry.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::min(table.feet(i, j), table.feet(j, i));
      table.feet(i, j) = table.feet(j, i) = d;
    }
  return table;
}

WorkingGraph::WorkingGraph(std::vector<JobNode> nodes, SquareMatrix distance, double speed)
    : nodes_(std::move(nodes)), distance_(std::move(distance)), speed_(speed) {
  if (nodes_.empty()) throw Error(ErrorCode::kInvalidArgument, "working graph needs a root node");
  if (distance_.size() != nodes_.size())
    throw Error(ErrorCode::kInvalidArgument, "travel matrix size does not match node count");
  if (!(speed_ > 0.0) || !std::isfinite(speed_))
    throw Error(ErrorCode::kInvalidArgument, "travel speed must be positive");
  const JobNode& root = nodes_.front();
  if (root.damaged || root.repair != 0.0 || root.reward != 0.0)
    throw Error(ErrorCode::kInvalidArgument, "root node must be undamaged with zero weight");
  for (const JobNode& v : nodes_) {
    if (!(v.repair >= 0.0) || !(v.reward >= 0.0) || !(v.penalty >= 0.0) ||
        !std::isfinite(v.repair) || !std::isfinite(v.reward) || !std::isfinite(v.penalty))
      throw Error(ErrorCode::kInvalidArgument, "node weights must be finite and nonnegative");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (distance_(i, i) != 0.0) throw Error(ErrorCode::kInvalidArgument, "travel diagonal must be zero");
    if (distance_(0, i) != 0.0 || distance_(i, 0) != 0.0)
      throw Error(ErrorCode::kInvalidArgument, "travel to and from the root must be zero");
    for (std::size_t j = 0; j < size(); ++j) {
      const double d = distance_(i, j);
      if (!(d >= 0.0) || !std::isfinite(d))
        throw Error(ErrorCode::kInvalidArgument, "travel entries must be finite and nonnegative");
    }
  }
  if (!distance_.is_symmetric())
    throw Error(ErrorCode::kInvalidArgument, "travel matrix must be symmetric");
}

std::size_t WorkingGraph::damaged_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const JobNode& v) { return v.damaged; }));
}

bool WorkingGraph::is_metric(double tol) const {
  const std::size_t n = size();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t k = 1; k < n; ++k)
        if (travel(i, k) > travel(i, j) + travel(j, k) + tol) return false;
  return true;
}

PrecedenceDag::PrecedenceDag(std::size_t node_count, std::vector<PrecedenceArc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)), preds_(node_count) {
  std::vector<std::vector<NodeIndex>> succ(node_count);
  std::vector<int> indegree(node_count, 0);
  for (const PrecedenceArc& a : arcs_) {
    if (a.tail < 0 || a.head < 0 || static_cast<std::size_t>(a.tail) >= node_count ||
        static_cast<std::size_t>(a.head) >= node_count)
      throw Error(ErrorCode::kTopology, "precedence arc endpoint out of range");
    if (a.tail == a.head) throw Error(ErrorCode::kTopology, "precedence self loop");
    preds_[a.head].push_back(a.tail);
    succ[a.tail].push_back(a.head);
    ++indegree[a.head];
  }
  // Kahn's algorithm.
  std::vector<NodeIndex> ready;
  for (std::size_t v = 0; v < node_count; ++v)
    if (indegree[v] == 0) ready.push_back(static_cast<NodeIndex>(v));
  std::size_t visited = 0;
  while (!ready.empty()) {
    const NodeIndex v = ready.back();
    ready.pop_back();
    ++visited;
    for (NodeIndex w : succ[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (visited != node_count) throw Error(ErrorCode::kTopology, "precedence graph has a cycle");
}

std::vector<PrecedenceArc> PrecedenceDag::sorted_arcs() const {
  std::vector<PrecedenceArc> out = arcs_;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<NodeIndex> JobMap::node_of_line(std::size_t line) const {
  for (std::size_t i = 1; i < jobs.size(); ++i)
    if (jobs[i] && jobs[i]->line == line) return static_cast<NodeIndex>(i);
  return std::nullopt;
}

CollapseResult collapse_undamaged(const PrecedenceDag& dag, const std::vector<bool>& damaged) {
  const std::size_t n = dag.node_count();
  if (damaged.size() != n) throw Error(ErrorCode::kInvalidArgument, "damage flags do not match dag size");
  if (n == 0) throw Error(ErrorCode::kTopology, "empty precedence dag");

  std::vector<std::vector<NodeIndex>> children(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& preds = dag.predecessors(static_cast<NodeIndex>(v));
    if (v == 0 && !preds.empty()) throw Error(ErrorCode::kTopology, "root has a predecessor");
    if (v != 0 && preds.size() != 1)
      throw Error(ErrorCode::kTopology, "node " + std::to_string(v) + " does not have exactly one parent");
    if (v != 0) children[preds.front()].push_back(static_cast<NodeIndex>(v));
  }

  // Depth-first from the root, carrying the nearest damaged ancestor.
  std::vector<PrecedenceArc> arcs;
  std::vector<NodeIndex> deleted;
  std::vector<std::pair<NodeIndex, NodeIndex>> stack{{0, 0}};  // (node, nearest damaged ancestor)
  std::size_t reached = 0;
  while (!stack.empty()) {
    auto [v, anchor] = stack.back();
    stack.pop_back();
    ++reached;
    NodeIndex next_anchor = anchor;
    if (v != 0) {
      if (damaged[v]) {
        arcs.push_back({anchor, v});
        next_anchor = v;
      } else {
        deleted.push_back(v);
      }
    }
    for (NodeIndex c : children[v]) stack.emplace_back(c, next_anchor);
  }
  if (reached != n) throw Error(ErrorCode::kTopology, "precedence dag is not rooted at node 0");
  std::sort(arcs.begin(), arcs.end());
  std::sort(deleted.begin(), deleted.end());
  return {PrecedenceDag(n, std::move(arcs)), std::move(deleted)};
}

WorkingGraphs build_working_graphs(const DistributionNetwork& net, const TransportGraph& transport,
                                   const std::vector<BusId>& energized, double speed) {
  if (!(speed > 0.0) || !std::isfinite(speed))
    throw Error(ErrorCode::kInvalidArgument, "travel speed must be positive");
  const std::vector<FlowArc> arcs = orient_power_flow(net);

  std::unordered_set<BusId> live(energized.begin(), energized.end());
  if (live.empty()) live.insert(net.source());
  if (!live.count(net.source()))
    throw Error(ErrorCode::kInvalidArgument, "energized region must contain the source");
  for (BusId b : live)
    if (!net.has_bus(b)) throw Error(ErrorCode::kInvalidArgument, "energized bus " + std::to_string(b) + " is not in the network");

  // The energized region must be a subtree hanging from the source: every
  // energized bus other than the source is fed by an energized parent.
  for (const FlowArc& a : arcs) {
    const bool up = live.count(a.upstream) != 0;
    const bool down = live.count(a.downstream) != 0;
    if (down && !up)
      throw Error(ErrorCode::kInvalidArgument,
                  "energized region is not connected to the source at bus " + std::to_string(a.downstream));
    if (up && down) {
      if (net.lines()[a.line].damaged)
        throw Error(ErrorCode::kInvalidArgument, "damaged line inside the energized region");
    }
  }

  // Directed line graph of the contracted network: node 0 is the auxiliary
  // root edge, nodes 1..K are the remaining lines in line order.
  std::vector<std::size_t> lg_line{0};
  std::unordered_map<BusId, NodeIndex> fed_by;  // downstream bus -> line-graph node
  for (const FlowArc& a : arcs) {
    if (live.count(a.downstream)) continue;
    fed_by[a.downstream] = static_cast<NodeIndex>(lg_line.size());
    lg_line.push_back(a.line);
  }
  const std::size_t k = lg_line.size();
  std::vector<PrecedenceArc> lg_arcs;
  std::vector<bool> damaged(k, false);
  for (std::size_t v = 1; v < k; ++v) {
    const FlowArc& a = arcs[lg_line[v]];
    damaged[v] = net.lines()[a.line].damaged;
    const NodeIndex parent = live.count(a.upstream) ? 0 : fed_by.at(a.upstream);
    lg_arcs.push_back({parent, static_cast<NodeIndex>(v)});
  }
  const CollapseResult collapsed = collapse_undamaged(PrecedenceDag(k, std::move(lg_arcs)), damaged);

  std::vector<NodeIndex> renumber(k, -1);
  renumber[0] = 0;
  WorkingGraphs out;
  out.jobs.jobs.push_back(std::nullopt);
  std::vector<JobNode> nodes{JobNode{}};
  for (std::size_t v = 1; v < k; ++v) {
    const FlowArc& a = arcs[lg_line[v]];
    if (!damaged[v]) {
      out.collapsed_lines.push_back(a.line);
      continue;
    }
    renumber[v] = static_cast<NodeIndex>(nodes.size());
    const Line& l = net.lines()[a.line];
    nodes.push_back(JobNode{l.repair_minutes, l.reward, l.penalty, true});
    out.jobs.jobs.push_back(a);
  }

  std::vector<PrecedenceArc> prec;
  for (const PrecedenceArc& a : collapsed.dag.arcs())
    prec.push_back({renumber[a.tail], renumber[a.head]});
  std::sort(prec.begin(), prec.end());

  const std::size_t n = nodes.size();
  SquareMatrix distance(n, 0.0);
  if (n > 1) {
    const DistanceTable table = apsp(transport);
    std::vector<std::size_t> site(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      const BusId bus = out.jobs.line_of(static_cast<NodeIndex>(i)).downstream;
      auto it = table.index.find(bus);
      if (it == table.index.end())
        throw Error(ErrorCode::kUnreachable,
                    "job site bus " + std::to_string(bus) + " is not on the transport graph");
      site[i] = it->second;
    }
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) distance(i, j) = table.feet(site[i], site[j]);
  }

  out.graph = WorkingGraph(std::move(nodes), std::move(distance), speed);
  out.precedence = PrecedenceDag(n, std::move(prec));
  return out;
}

}  // namespace gridrestore

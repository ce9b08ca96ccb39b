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

// Graph pipeline from a damaged distribution network to the two working
// graphs used by the scheduler:
//
//   * the complete, doubly weighted job graph (node weights are repair times,
//     edge weights are travel times, node 0 is the home/root job), and
//   * the precedence dag that encodes electrical continuity among jobs.

#ifndef GRIDRESTORE_TRANSFORM_HPP_
#define GRIDRESTORE_TRANSFORM_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gridrestore/network.hpp"

namespace gridrestore {

using NodeIndex = int;

// Dense row-major square matrix.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Shortest-path distances between every pair of transport buses, in feet.
struct DistanceTable {
  std::vector<BusId> buses;
  SquareMatrix feet;
  std::unordered_map<BusId, std::size_t> index;

  double between(BusId a, BusId b) const { return feet(index.at(a), index.at(b)); }
};

// Throws Error(kUnreachable) naming the first disconnected pair.
DistanceTable apsp(const TransportGraph& transport);

struct JobNode {
  double repair = 0.0;   // w_i, minutes
  double reward = 0.0;   // r_i
  double penalty = 0.0;  // p_i
  bool damaged = false;
};

// Complete undirected job graph. Travel times are held as a distance matrix
// and a single speed so that travel(i, j) = distance(i, j) / speed exactly;
// graphs built directly in minutes use speed 1.
class WorkingGraph {
 public:
  WorkingGraph() = default;

  // Node 0 is the root: it must be undamaged with zero repair time and reward,
  // and its distance row must be zero. Throws Error(kInvalidArgument).
  WorkingGraph(std::vector<JobNode> nodes, SquareMatrix distance, double speed = 1.0);

  std::size_t size() const { return nodes_.size(); }
  const JobNode& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<JobNode>& nodes() const { return nodes_; }
  double repair(std::size_t i) const { return nodes_[i].repair; }
  double reward(std::size_t i) const { return nodes_[i].reward; }
  double penalty(std::size_t i) const { return nodes_[i].penalty; }
  bool damaged(std::size_t i) const { return nodes_[i].damaged; }
  std::size_t damaged_count() const;

  double travel(std::size_t i, std::size_t j) const { return distance_(i, j) / speed_; }
  const SquareMatrix& distance() const { return distance_; }
  double speed() const { return speed_; }
  // Triangle inequality over all triples of jobs, within `tol`. The root is
  // left out: its legs are free by construction.
  // Triangle inequality over all triples, within `tol`.
  bool is_metric(double tol = 1e-9) const;

 private:
  std::vector<JobNode> nodes_;
  SquareMatrix distance_;
  double speed_ = 1.0;
};

struct PrecedenceArc {
  NodeIndex tail = 0;
  NodeIndex head = 0;

  friend bool operator==(const PrecedenceArc&, const PrecedenceArc&) = default;
  friend auto operator<=>(const PrecedenceArc&, const PrecedenceArc&) = default;
};

class PrecedenceDag {
 public:
  PrecedenceDag() = default;
  // Throws Error(kTopology) on a cycle or an out-of-range endpoint.
  PrecedenceDag(std::size_t node_count, std::vector<PrecedenceArc> arcs);

  std::size_t node_count() const { return node_count_; }
  const std::vector<PrecedenceArc>& arcs() const { return arcs_; }
  std::vector<PrecedenceArc> sorted_arcs() const;
  const std::vector<NodeIndex>& predecessors(NodeIndex v) const { return preds_[v]; }

 private:
  std::size_t node_count_ = 0;
  std::vector<PrecedenceArc> arcs_;
  std::vector<std::vector<NodeIndex>> preds_;
};

// Which original line each working node repairs. Entry 0 (root) is empty.
struct JobMap {
  std::vector<std::optional<FlowArc>> jobs;

  const FlowArc& line_of(NodeIndex node) const { return *jobs.at(node); }
  std::optional<NodeIndex> node_of_line(std::size_t line) const;
};

struct CollapseResult {
  PrecedenceDag dag;
  std::vector<NodeIndex> deleted;  // undamaged non-root nodes, ascending
};

// Removes every undamaged non-root node from a rooted out-tree (root = node 0)
// and links each damaged node to its nearest damaged ancestor, or to the root
// when it has none. Node numbering is preserved. Throws Error(kTopology) if the
// dag is not an out-tree rooted at 0.
CollapseResult collapse_undamaged(const PrecedenceDag& dag, const std::vector<bool>& damaged);

struct WorkingGraphs {
  WorkingGraph graph;
  PrecedenceDag precedence;
  JobMap jobs;
  // Lines outside the energized region that needed no repair and were folded
  // away by the collapse.
  std::vector<std::size_t> collapsed_lines;
};

// The energized region is contracted into the root. Each damaged line becomes
// a job whose site is its downstream bus; travel between two jobs is the
// transport shortest path between their sites divided by `speed` (ft/min).
// Jobs are numbered 1..n-1 in network line order.
WorkingGraphs build_working_graphs(const DistributionNetwork& net,
                                   const TransportGraph& transport,
                                   const std::vector<BusId>& energized, double speed);

}  // namespace gridrestore

#endif  // GRIDRESTORE_TRANSFORM_HPP_

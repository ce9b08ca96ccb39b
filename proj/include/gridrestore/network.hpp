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

// Physical distribution network (buses and lines) and the transportation
// graph used for crew travel.

#ifndef GRIDRESTORE_NETWORK_HPP_
#define GRIDRESTORE_NETWORK_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace gridrestore {

using BusId = std::int64_t;

struct Line {
  BusId from = 0;
  BusId to = 0;
  double length_ft = 1.0;
  bool damaged = false;
  double repair_minutes = 0.0;  // w; zero unless damaged
  double reward = 0.0;          // r; zero unless damaged
  double penalty = 0.0;         // p
};

// A line directed along the power flow, away from the source.
struct FlowArc {
  std::size_t line = 0;  // index into DistributionNetwork::lines()
  BusId upstream = 0;
  BusId downstream = 0;
};

// Edges are stored undirected. Orientation depends on the source and is
// always computed (see orient_power_flow).
class DistributionNetwork {
 public:
  DistributionNetwork() = default;

  // Buses mentioned by lines are added implicitly; `buses` may list extra
  // isolated buses. Throws Error(kInvalidArgument) on attribute violations:
  // negative or non-finite numbers, self loops, or an undamaged line with a
  // nonzero repair time or reward.
  DistributionNetwork(std::vector<BusId> sources, std::vector<Line> lines,
                      std::vector<BusId> buses = {});
  DistributionNetwork(BusId source, std::vector<Line> lines,
                      std::vector<BusId> buses = {})
      : DistributionNetwork(std::vector<BusId>{source}, std::move(lines),
                            std::move(buses)) {}

  const std::vector<BusId>& sources() const { return sources_; }
  // First declared source. Radial networks have exactly one.
  BusId source() const;
  const std::vector<BusId>& buses() const { return buses_; }
  const std::vector<Line>& lines() const { return lines_; }

  bool has_bus(BusId bus) const { return index_.count(bus) != 0; }
  std::size_t bus_index(BusId bus) const;

  // Index of the line joining a and b in either direction, or npos.
  std::size_t find_line(BusId a, BusId b) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t damaged_count() const;

 private:
  std::vector<BusId> sources_;
  std::vector<Line> lines_;
  std::vector<BusId> buses_;
  std::unordered_map<BusId, std::size_t> index_;
};

struct Road {
  BusId from = 0;
  BusId to = 0;
  double length_ft = 0.0;
};

class TransportGraph {
 public:
  TransportGraph() = default;
  explicit TransportGraph(std::vector<Road> roads, std::vector<BusId> buses = {});

  // Road network identical to the power network, one road per line.
  static TransportGraph from_network(const DistributionNetwork& net);

  const std::vector<BusId>& buses() const { return buses_; }
  const std::vector<Road>& roads() const { return roads_; }
  bool has_bus(BusId bus) const { return index_.count(bus) != 0; }
  std::size_t bus_index(BusId bus) const;

 private:
  std::vector<Road> roads_;
  std::vector<BusId> buses_;
  std::unordered_map<BusId, std::size_t> index_;
};

enum class ViolationKind {
  kMissingSource,
  kMultipleSources,
  kCycle,
  kDisconnected,
  kLength,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

// Topology only: one source, connected, acyclic.
ValidationReport validate_radial(const DistributionNetwork& net);

// Lines shorter than `min_length_ft`.
ValidationReport validate_lengths(const DistributionNetwork& net,
                                  double min_length_ft = 1.0);

// One arc per line, directed away from the source along the unique tree path.
// Arcs are returned in line order. Throws Error(kTopology) if not radial.
std::vector<FlowArc> orient_power_flow(const DistributionNetwork& net);

// Same, rooted at an arbitrary bus of the tree.
std::vector<FlowArc> orient_from(const DistributionNetwork& net, BusId root);

const char* to_string(ViolationKind kind);

}  // namespace gridrestore

#endif  // GRIDRESTORE_NETWORK_HPP_

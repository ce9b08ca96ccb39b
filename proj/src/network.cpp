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

#include "gridrestore/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "gridrestore/error.hpp"

namespace gridrestore {
namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

std::string line_name(const Line& l) {
  std::ostringstream os;
  os << "(" << l.from << "," << l.to << ")";
  return os.str();
}

void add_bus(BusId bus, std::vector<BusId>& buses,
             std::unordered_map<BusId, std::size_t>& index) {
  if (index.emplace(bus, buses.size()).second) buses.push_back(bus);
}

// Union-find over bus indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

DistributionNetwork::DistributionNetwork(std::vector<BusId> sources,
                                         std::vector<Line> lines,
                                         std::vector<BusId> buses)
    : sources_(std::move(sources)), lines_(std::move(lines)) {
  for (BusId b : buses) add_bus(b, buses_, index_);
  for (BusId s : sources_) add_bus(s, buses_, index_);
  for (const Line& l : lines_) {
    if (l.from == l.to)
      throw Error(ErrorCode::kInvalidArgument, "self loop at bus " + std::to_string(l.from));
    if (!finite_nonneg(l.length_ft) || !finite_nonneg(l.repair_minutes) ||
        !finite_nonneg(l.reward) || !finite_nonneg(l.penalty))
      throw Error(ErrorCode::kInvalidArgument,
                  "line " + line_name(l) + " has a negative or non-finite attribute");
    if (!l.damaged && (l.repair_minutes != 0.0 || l.reward != 0.0))
      throw Error(ErrorCode::kInvalidArgument,
                  "undamaged line " + line_name(l) + " must have zero repair time and reward");
    add_bus(l.from, buses_, index_);
    add_bus(l.to, buses_, index_);
  }
}

BusId DistributionNetwork::source() const {
  if (sources_.empty()) throw Error(ErrorCode::kTopology, "network has no source");
  return sources_.front();
}

std::size_t DistributionNetwork::bus_index(BusId bus) const {
  auto it = index_.find(bus);
  if (it == index_.end())
    throw Error(ErrorCode::kInvalidArgument, "unknown bus " + std::to_string(bus));
  return it->second;
}

std::size_t DistributionNetwork::find_line(BusId a, BusId b) const {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const Line& l = lines_[i];
    if ((l.from == a && l.to == b) || (l.from == b && l.to == a)) return i;
  }
  return npos;
}

std::size_t DistributionNetwork::damaged_count() const {
  return static_cast<std::size_t>(
      std::count_if(lines_.begin(), lines_.end(), [](const Line& l) { return l.damaged; }));
}

TransportGraph::TransportGraph(std::vector<Road> roads, std::vector<BusId> buses)
    : roads_(std::move(roads)) {
  for (BusId b : buses) add_bus(b, buses_, index_);
  for (const Road& r : roads_) {
    if (!finite_nonneg(r.length_ft))
      throw Error(ErrorCode::kInvalidArgument,
                  "road (" + std::to_string(r.from) + "," + std::to_string(r.to) +
                      ") has a negative or non-finite length");
    add_bus(r.from, buses_, index_);
    add_bus(r.to, buses_, index_);
  }
}

TransportGraph TransportGraph::from_network(const DistributionNetwork& net) {
  std::vector<Road> roads;
  roads.reserve(net.lines().size());
  for (const Line& l : net.lines()) roads.push_back({l.from, l.to, l.length_ft});
  return TransportGraph(std::move(roads), net.buses());
}

std::size_t TransportGraph::bus_index(BusId bus) const {
  auto it = index_.find(bus);
  if (it == index_.end())
    throw Error(ErrorCode::kInvalidArgument, "bus " + std::to_string(bus) +
                                                 " is not on the transport graph");
  return it->second;
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_radial(const DistributionNetwork& net) {
  ValidationReport report;
  if (net.sources().empty()) {
    report.violations.push_back({ViolationKind::kMissingSource, "no source bus"});
  } else if (net.sources().size() > 1) {
    report.violations.push_back(
        {ViolationKind::kMultipleSources,
         std::to_string(net.sources().size()) + " sources declared"});
  }

  const std::size_t n = net.buses().size();
  DisjointSets sets(n);
  for (const Line& l : net.lines()) {
    if (!sets.unite(net.bus_index(l.from), net.bus_index(l.to))) {
      report.violations.push_back({ViolationKind::kCycle, "line " + line_name(l) + " closes a cycle"});
    }
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (sets.find(i) == i) ++components;
  if (components > 1) {
    report.violations.push_back(
        {ViolationKind::kDisconnected, std::to_string(components) + " connected components"});
  }
  return report;
}

ValidationReport validate_lengths(const DistributionNetwork& net, double min_length_ft) {
  ValidationReport report;
  for (const Line& l : net.lines()) {
    if (l.length_ft < min_length_ft)
      report.violations.push_back({ViolationKind::kLength, "line " + line_name(l) + " is too short"});
  }
  return report;
}

std::vector<FlowArc> orient_from(const DistributionNetwork& net, BusId root) {
  ValidationReport report = validate_radial(net);
  std::erase_if(report.violations, [](const Violation& v) {
    return v.kind == ViolationKind::kMultipleSources || v.kind == ViolationKind::kMissingSource;
  });
  if (!report.ok())
    throw Error(ErrorCode::kTopology, "network is not radial: " + report.violations.front().detail);

  const std::size_t n = net.buses().size();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < net.lines().size(); ++i) {
    incident[net.bus_index(net.lines()[i].from)].push_back(i);
    incident[net.bus_index(net.lines()[i].to)].push_back(i);
  }

  std::vector<FlowArc> arcs(net.lines().size());
  std::vector<bool> seen(n, false);
  std::queue<BusId> frontier;
  frontier.push(root);
  seen[net.bus_index(root)] = true;
  while (!frontier.empty()) {
    const BusId bus = frontier.front();
    frontier.pop();
    for (std::size_t li : incident[net.bus_index(bus)]) {
      const Line& l = net.lines()[li];
      const BusId other = l.from == bus ? l.to : l.from;
      const std::size_t oi = net.bus_index(other);
      if (seen[oi]) continue;
      seen[oi] = true;
      arcs[li] = FlowArc{li, bus, other};
      frontier.push(other);
    }
  }
  return arcs;
}

std::vector<FlowArc> orient_power_flow(const DistributionNetwork& net) {
  const ValidationReport report = validate_radial(net);
  if (!report.ok())
    throw Error(ErrorCode::kTopology, "network is not radial: " + report.violations.front().detail);
  return orient_from(net, net.source());
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMissingSource: return "missing_source";
    case ViolationKind::kMultipleSources: return "multiple_sources";
    case ViolationKind::kCycle: return "cycle";
    case ViolationKind::kDisconnected: return "disconnected";
    case ViolationKind::kLength: return "length";
  }
  return "unknown";
}

}  // namespace gridrestore

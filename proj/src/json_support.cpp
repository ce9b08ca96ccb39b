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

#include "json_support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gridrestore/error.hpp"

namespace gridrestore::detail {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path);
  return os.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..." in what().
    throw Error(ErrorCode::kParse, origin + ": " + e.what());
  }
}

void schema_error(const std::string& origin, const std::string& what) {
  throw Error(ErrorCode::kParse, origin + ": " + what);
}

double number_field(const json& obj, const char* key, const std::string& origin) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(origin, std::string("missing field '") + key + "'");
  if (!it->is_number()) schema_error(origin, std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

double number_field(const json& obj, const char* key, double fallback, const std::string& origin) {
  return obj.contains(key) ? number_field(obj, key, origin) : fallback;
}

BusId bus_value(const json& v, const std::string& origin) {
  if (!v.is_number_integer()) schema_error(origin, "bus ids must be integers, got " + v.dump());
  return v.get<BusId>();
}

namespace {

std::pair<BusId, BusId> endpoints(const json& obj, const std::string& origin) {
  if (!obj.is_object() || !obj.contains("from") || !obj.contains("to"))
    schema_error(origin, "line entries need 'from' and 'to': " + obj.dump());
  return {bus_value(obj["from"], origin), bus_value(obj["to"], origin)};
}

bool same_line(const Line& l, BusId a, BusId b) {
  return (l.from == a && l.to == b) || (l.from == b && l.to == a);
}

}  // namespace

FeederData feeder_from_json(const json& doc, const std::string& origin) {
  if (!doc.is_object()) schema_error(origin, "expected a JSON object");
  FeederData out;
  out.name = doc.value("name", std::string());
  if (!doc.contains("source")) schema_error(origin, "missing field 'source'");
  const BusId source = bus_value(doc["source"], origin);
  if (!doc.contains("lines") || !doc["lines"].is_array()) schema_error(origin, "missing array 'lines'");

  std::vector<Line> lines;
  for (const json& jl : doc["lines"]) {
    auto [from, to] = endpoints(jl, origin);
    Line l;
    l.from = from;
    l.to = to;
    l.length_ft = number_field(jl, "length_ft", origin);
    l.damaged = jl.value("damaged", false);
    if (l.damaged) {
      out.annotated = true;
      l.repair_minutes = number_field(jl, "repair_min", origin);
      l.reward = number_field(jl, "reward", 1.0, origin);
    }
    l.penalty = number_field(jl, "penalty", 0.0, origin);
    lines.push_back(l);
  }

  // Deletions first, then length floors; both commute with themselves.
  double floor_ft = 0.0;
  if (doc.contains("patches")) {
    for (const json& p : doc["patches"]) {
      const std::string op = p.value("op", std::string());
      if (op == "delete_line") {
        auto [a, b] = endpoints(p, origin);
        auto it = std::find_if(lines.begin(), lines.end(), [&](const Line& l) { return same_line(l, a, b); });
        if (it == lines.end())
          schema_error(origin, "patch deletes unknown line (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        lines.erase(it);
      } else if (op == "floor_length") {
        floor_ft = std::max(floor_ft, number_field(p, "min_ft", origin));
      } else {
        schema_error(origin, "unknown patch op '" + op + "'");
      }
    }
  }
  for (Line& l : lines) l.length_ft = std::max(l.length_ft, floor_ft);

  try {
    out.network = DistributionNetwork(source, std::move(lines));
  } catch (const Error& e) {
    throw Error(e.code(), origin + ": " + e.what());
  }
  const ValidationReport report = validate_radial(out.network);
  if (!report.ok()) {
    std::string msg = origin + ": network is not radial after patches:";
    for (const Violation& v : report.violations) msg += " " + std::string(to_string(v.kind)) + " (" + v.detail + ")";
    throw Error(ErrorCode::kTopology, msg);
  }

  if (doc.contains("roads")) {
    std::vector<Road> roads;
    for (const json& jr : doc["roads"]) {
      auto [a, b] = endpoints(jr, origin);
      roads.push_back({a, b, number_field(jr, "length_ft", origin)});
    }
    out.transport = TransportGraph(std::move(roads), out.network.buses());
  } else {
    out.transport = TransportGraph::from_network(out.network);
  }

  if (doc.contains("energized"))
    for (const json& b : doc["energized"]) out.energized.push_back(bus_value(b, origin));
  return out;
}

SolverOptions solver_options_from_json(const json& o, const std::string& origin) {
  SolverOptions opts;
  if (!o.is_object()) schema_error(origin, "'options' must be an object");
  try {
    if (o.contains("mode")) opts.home_degree = parse_home_degree(o["mode"].get<std::string>());
    if (o.contains("objective")) opts.objective = parse_objective(o["objective"].get<std::string>());
    opts.symmetry_breaking = o.value("symmetry_breaking", true);
    opts.memoize = o.value("memoize", true);
  } catch (const json::exception& e) {
    schema_error(origin, e.what());
  } catch (const Error& e) {
    schema_error(origin, e.what());
  }
  return opts;
}

SearchLimits limits_from_json(const json& l, const std::string& origin) {
  SearchLimits limits;
  if (!l.is_object()) schema_error(origin, "'limits' must be an object");
  limits.time_limit_s = number_field(l, "time_limit_s", limits.time_limit_s, origin);
  limits.node_limit = l.value("node_limit", std::uint64_t{0});
  limits.abs_gap = number_field(l, "abs_gap", 0.0, origin);
  limits.rel_gap = number_field(l, "rel_gap", 0.0, origin);
  if (limits.time_limit_s < 0 || limits.abs_gap < 0 || limits.rel_gap < 0)
    schema_error(origin, "limits must be non-negative");
  return limits;
}

}  // namespace gridrestore::detail

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

// JSON readers shared by the feeder, scenario and sweep loaders.

#ifndef GRIDRESTORE_SRC_JSON_SUPPORT_HPP_
#define GRIDRESTORE_SRC_JSON_SUPPORT_HPP_

#include <string>

#include "gridrestore/feeders.hpp"
#include "gridrestore/solve.hpp"
#include "json.hpp"

namespace gridrestore::detail {

using nlohmann::json;

// Reads a whole file; Error(kIo) on failure.
std::string read_text(const std::string& path);

// Parses JSON, turning syntax errors into Error(kParse) that name the origin
// and the line.
json parse_json(const std::string& text, const std::string& origin);

[[noreturn]] void schema_error(const std::string& origin, const std::string& what);

// Typed field access with schema errors naming the field.
double number_field(const json& obj, const char* key, const std::string& origin);
double number_field(const json& obj, const char* key, double fallback, const std::string& origin);
BusId bus_value(const json& v, const std::string& origin);

FeederData feeder_from_json(const json& doc, const std::string& origin);

// {"mode", "objective", "symmetry_breaking", "memoize"}
SolverOptions solver_options_from_json(const json& obj, const std::string& origin);
// {"time_limit_s", "node_limit", "abs_gap", "rel_gap"}
SearchLimits limits_from_json(const json& obj, const std::string& origin);

}  // namespace gridrestore::detail

#endif  // GRIDRESTORE_SRC_JSON_SUPPORT_HPP_

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

#include "gridrestore/feeders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "gridrestore/error.hpp"
#include "json_support.hpp"

namespace gridrestore {

FeederData load_feeder(const std::string& path) {
  return parse_feeder(detail::read_text(path), path);
}

FeederData parse_feeder(const std::string& text, const std::string& origin) {
  const detail::json doc = detail::parse_json(text, origin);
  try {
    return detail::feeder_from_json(doc, origin);
  } catch (const detail::json::exception& e) {
    detail::schema_error(origin, e.what());
  }
}

double post_floor_mean(const WeibullLaw& law) {
  const double k = law.shape;
  const double lambda = law.scale;
  const double f = law.floor;
  if (!(k > 0.0) || !(lambda > 0.0) || f < 0.0)
    throw Error(ErrorCode::kInvalidArgument, "Weibull shape and scale must be positive, floor non-negative");
  // max(F, X) = F + (X - F)+, and E[(X - F)+] = (λ/k) Γ(1/k, (F/λ)^k).
  return f + lambda / k * boost::math::tgamma(1.0 / k, std::pow(f / lambda, k));
}

double calibrate_scale(double shape, double floor, double mean) {
  if (!(shape > 0.0) || floor < 0.0) throw Error(ErrorCode::kInvalidArgument, "invalid Weibull law");
  if (!(mean > floor))
    throw Error(ErrorCode::kInvalidArgument, "mean repair time must exceed the floor");
  double lo = 1e-9;
  double hi = std::max(1.0, mean);
  while (post_floor_mean({shape, hi, floor}) < mean) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (post_floor_mean({shape, mid, floor}) < mean)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> sample_repair_times(const WeibullLaw& law, std::size_t count, SplitMix64& rng) {
  if (!(law.shape > 0.0) || law.scale < 0.0 || law.floor < 0.0)
    throw Error(ErrorCode::kInvalidArgument, "invalid Weibull law");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.uniform();
    const double x = law.scale * std::pow(-std::log1p(-u), 1.0 / law.shape);
    out.push_back(std::max(law.floor, x));
  }
  return out;
}

RepairSample sample_repair_times(const DistributionNetwork& net, const DamagePlan& plan) {
  SplitMix64 rng(plan.seed);
  return sample_repair_times(net, plan, rng);
}

RepairSample sample_repair_times(const DistributionNetwork& net, const DamagePlan& plan,
                                 SplitMix64& rng) {
  RepairSample s;
  if (plan.lines.empty()) {
    for (std::size_t i = 0; i < net.lines().size(); ++i) s.lines.push_back(i);
  } else {
    for (auto [a, b] : plan.lines) {
      const std::size_t i = net.find_line(a, b);
      if (i == DistributionNetwork::npos)
        throw Error(ErrorCode::kInvalidArgument,
                    "damage plan names unknown line (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      s.lines.push_back(i);
    }
  }
  s.scale = calibrate_scale(plan.shape, plan.floor, plan.mean);
  s.minutes = sample_repair_times(WeibullLaw{plan.shape, s.scale, plan.floor}, s.lines.size(), rng);
  double total = 0.0;
  for (double m : s.minutes) total += m;
  s.achieved_mean = s.minutes.empty() ? 0.0 : total / static_cast<double>(s.minutes.size());
  return s;
}

DistributionNetwork apply_damage(const DistributionNetwork& net, const RepairSample& sample,
                                 double reward) {
  std::vector<Line> lines = net.lines();
  for (std::size_t k = 0; k < sample.lines.size(); ++k) {
    Line& l = lines.at(sample.lines[k]);
    l.damaged = true;
    l.repair_minutes = sample.minutes.at(k);
    l.reward = reward;
  }
  return DistributionNetwork(net.sources(), std::move(lines), net.buses());
}

std::string repair_samples_csv(const DistributionNetwork& net, const RepairSample& sample) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << "from,to,repair_min\n";
  for (std::size_t k = 0; k < sample.lines.size(); ++k) {
    const Line& l = net.lines().at(sample.lines[k]);
    os << l.from << "," << l.to << "," << sample.minutes[k] << "\n";
  }
  return os.str();
}

double TravelMatrix::min() const {
  double v = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < minutes.size(); ++i)
    for (std::size_t j = 0; j < minutes.size(); ++j)
      if (i != j) v = std::min(v, minutes(i, j));
  return v;
}

double TravelMatrix::max() const {
  double v = 0.0;
  for (std::size_t i = 0; i < minutes.size(); ++i)
    for (std::size_t j = 0; j < minutes.size(); ++j)
      if (i != j) v = std::max(v, minutes(i, j));
  return v;
}

double TravelMatrix::mean() const {
  const std::size_t n = minutes.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) total += minutes(i, j);
  return total / static_cast<double>(n * (n - 1));
}

TravelMatrix travel_time_matrix(const DistributionNetwork& net, const TransportGraph& transport,
                                double speed) {
  if (!(speed > 0.0) || !std::isfinite(speed))
    throw Error(ErrorCode::kInvalidArgument, "travel speed must be positive");
  TravelMatrix out;
  out.sites.push_back(net.source());
  for (const FlowArc& a : orient_power_flow(net)) out.sites.push_back(a.downstream);
  const DistanceTable d = apsp(transport);
  const std::size_t n = out.sites.size();
  out.minutes = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.minutes(i, j) = d.between(out.sites[i], out.sites[j]) / speed;
  return out;
}

TravelMatrix travel_time_matrix(const DistributionNetwork& net, double speed) {
  return travel_time_matrix(net, TransportGraph::from_network(net), speed);
}

}  // namespace gridrestore

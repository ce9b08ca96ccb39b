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

#ifndef GRIDRESTORE_FEEDERS_HPP_
#define GRIDRESTORE_FEEDERS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gridrestore/network.hpp"
#include "gridrestore/random.hpp"
#include "gridrestore/transform.hpp"

namespace gridrestore {

// Network file contents after patches. Files may also annotate damage on
// individual lines; `annotated` is true when any line carries damage data.
struct FeederData {
  std::string name;
  DistributionNetwork network;
  TransportGraph transport;
  std::vector<BusId> energized;
  bool annotated = false;
};

// Throws Error(kIo) if unreadable, Error(kParse) with the line number on
// malformed JSON or schema errors, Error(kTopology) if not radial after the
// patch list is applied.
FeederData load_feeder(const std::string& path);
FeederData parse_feeder(const std::string& text, const std::string& origin = "<memory>");

struct WeibullLaw {
  double shape = 2.0;
  double scale = 1.0;
  double floor = 30.0;  // minutes; samples are clamped up to this value
};

// E[max(floor, X)] for X ~ Weibull(shape, scale).
double post_floor_mean(const WeibullLaw& law);

// Scale giving the requested post-floor mean. Throws Error(kInvalidArgument)
// unless mean > floor.
double calibrate_scale(double shape, double floor, double mean);

std::vector<double> sample_repair_times(const WeibullLaw& law, std::size_t count, SplitMix64& rng);

struct DamagePlan {
  // Empty: every line is damaged.
  std::vector<std::pair<BusId, BusId>> lines;
  double shape = 2.0;
  double mean = 47.725;  // post-floor target
  double floor = 30.0;
  double reward = 1.0;
  std::uint64_t seed = 1;
};

struct RepairSample {
  std::vector<std::size_t> lines;  // indices into the network's lines
  std::vector<double> minutes;
  double scale = 0.0;
  double achieved_mean = 0.0;
};

// Draws one time per damaged line from the plan's own stream.
RepairSample sample_repair_times(const DistributionNetwork& net, const DamagePlan& plan);
// Same, drawing from `rng`.
RepairSample sample_repair_times(const DistributionNetwork& net, const DamagePlan& plan,
                                 SplitMix64& rng);

// Copy of `net` with the sampled lines damaged.
DistributionNetwork apply_damage(const DistributionNetwork& net, const RepairSample& sample,
                                 double reward = 1.0);

std::string repair_samples_csv(const DistributionNetwork& net, const RepairSample& sample);

// Travel minutes between job sites: the source bus followed by the
// downstream bus of each line in line order.
struct TravelMatrix {
  std::vector<BusId> sites;
  SquareMatrix minutes;

  // Off-diagonal extremes and mean.
  double min() const;
  double max() const;
  double mean() const;
};

TravelMatrix travel_time_matrix(const DistributionNetwork& net, const TransportGraph& transport,
                                double speed);
TravelMatrix travel_time_matrix(const DistributionNetwork& net, double speed);

}  // namespace gridrestore

#endif  // GRIDRESTORE_FEEDERS_HPP_

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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "gridrestore/error.hpp"
#include "gridrestore/feeders.hpp"
#include "gridrestore/random.hpp"
#include "test_support.hpp"

using namespace gridrestore;

TEST_CASE("SplitMix64 reproduces the reference sequence") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("derived streams are deterministic and distinct") {
  auto a = SplitMix64::derive(7, {1, 2});
  auto b = SplitMix64::derive(7, {1, 2});
  auto c = SplitMix64::derive(7, {2, 1});
  auto d = SplitMix64::derive(8, {1, 2});
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(x != d.next());
  SplitMix64 u(3);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("IEEE 13-bus feeder") {
  const FeederData f = load_feeder(testing::data_path("feeders/ieee13.json"));
  CHECK(f.name == "ieee13");
  CHECK(f.network.source() == 650);
  CHECK(f.network.lines().size() == 12);
  CHECK(validate_radial(f.network).ok());
  CHECK(validate_lengths(f.network).ok());
  CHECK_FALSE(f.annotated);
  const std::size_t li = f.network.find_line(633, 634);
  REQUIRE(li != DistributionNetwork::npos);
  CHECK(f.network.lines()[li].length_ft == 1.0);  // transformer branch, floored
}

TEST_CASE("IEEE 34-bus and 123-bus feeders") {
  const FeederData f34 = load_feeder(testing::data_path("feeders/ieee34.json"));
  CHECK(f34.network.lines().size() == 33);
  CHECK(f34.network.buses().size() == 34);
  CHECK(validate_radial(f34.network).ok());

  const FeederData f123 = load_feeder(testing::data_path("feeders/ieee123.json"));
  CHECK(validate_radial(f123.network).ok());
  CHECK(validate_lengths(f123.network).ok());
  CHECK(f123.network.find_line(151, 300) == DistributionNetwork::npos);
  CHECK(f123.network.find_line(54, 94) == DistributionNetwork::npos);
  CHECK(f123.network.lines().size() + 1 == f123.network.buses().size());
}

TEST_CASE("feeder patches are order independent and idempotent") {
  const std::string base = R"({"source": 1, "lines": [
      {"from": 1, "to": 2, "length_ft": 0.2}, {"from": 2, "to": 3, "length_ft": 5},
      {"from": 3, "to": 1, "length_ft": 4}], "patches": [)";
  const auto a = parse_feeder(base + R"({"op": "delete_line", "from": 3, "to": 1},
      {"op": "floor_length", "min_ft": 1}]})");
  const auto b = parse_feeder(base + R"({"op": "floor_length", "min_ft": 1},
      {"op": "delete_line", "from": 1, "to": 3}, {"op": "floor_length", "min_ft": 1}]})");
  REQUIRE(a.network.lines().size() == 2);
  REQUIRE(b.network.lines().size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(a.network.lines()[i].length_ft == b.network.lines()[i].length_ft);
  CHECK(a.network.lines()[0].length_ft == 1.0);
}

TEST_CASE("feeder input errors") {
  try {
    parse_feeder("{\"source\": 1,\n \"lines\": [ }", "bad.json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_feeder(R"({"source": 1, "lines": [{"from": 1, "to": 2, "length_ft": 1},
        {"from": 2, "to": 3, "length_ft": 1}, {"from": 3, "to": 1, "length_ft": 1}]})");
    FAIL("expected a topology error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTopology);
  }
  CHECK_THROWS_AS(parse_feeder(R"({"lines": []})"), Error);
  CHECK_THROWS_AS(parse_feeder(R"({"source": 1, "lines": [{"from": 1, "to": "x", "length_ft": 1}]})"), Error);
  CHECK_THROWS_AS(load_feeder("/nonexistent/feeder.json"), Error);
}

TEST_CASE("post-floor mean against numerical integration") {
  const WeibullLaw law{2.0, 30.0, 30.0};
  // E[max(X, F)] = F + ∫_F^∞ S(x) dx with S the survival function.
  double integral = 0.0;
  const double h = 1e-3;
  for (double x = law.floor; x < law.floor + 400.0; x += h) {
    const double mid = x + h / 2;
    integral += std::exp(-std::pow(mid / law.scale, law.shape)) * h;
  }
  CHECK(post_floor_mean(law) == doctest::Approx(law.floor + integral).epsilon(1e-6));
}

TEST_CASE("scale calibration hits the target mean") {
  for (double mean : {31.0, 40.0, 47.725, 56.0, 66.0}) {
    const double scale = calibrate_scale(2.0, 30.0, mean);
    CHECK(post_floor_mean({2.0, scale, 30.0}) == doctest::Approx(mean).epsilon(1e-9));
  }
  CHECK_THROWS_AS(calibrate_scale(2.0, 30.0, 29.0), Error);
}

TEST_CASE("Monte Carlo mean of clamped Weibull samples") {
  const double scale = calibrate_scale(2.0, 30.0, 47.725);
  SplitMix64 rng(12345);
  const auto xs = sample_repair_times(WeibullLaw{2.0, scale, 30.0}, 100000, rng);
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  CHECK(std::abs(mean - 47.725) < 0.5);
  CHECK(*std::min_element(xs.begin(), xs.end()) >= 30.0);
}

TEST_CASE("a vanishing scale leaves only the floor") {
  SplitMix64 rng(1);
  for (double x : sample_repair_times(WeibullLaw{2.0, 1e-9, 30.0}, 100, rng)) CHECK(x == 30.0);
}

TEST_CASE("damage sampling is deterministic per seed") {
  const FeederData f = load_feeder(testing::data_path("feeders/ieee13.json"));
  DamagePlan plan;
  plan.seed = 42;
  const auto a = sample_repair_times(f.network, plan);
  const auto b = sample_repair_times(f.network, plan);
  CHECK(a.minutes == b.minutes);
  CHECK(a.lines.size() == 12);
  plan.seed = 43;
  CHECK(sample_repair_times(f.network, plan).minutes != a.minutes);

  plan.lines = {{632, 671}, {692, 675}};
  const auto some = sample_repair_times(f.network, plan);
  CHECK(some.lines.size() == 2);
  const auto net = apply_damage(f.network, some, 2.0);
  CHECK(net.damaged_count() == 2);
  CHECK(net.lines()[some.lines[0]].reward == 2.0);
  CHECK(net.lines()[some.lines[1]].repair_minutes == some.minutes[1]);

  plan.lines = {{650, 999}};
  CHECK_THROWS_AS(sample_repair_times(f.network, plan), Error);

  const std::string csv = repair_samples_csv(f.network, some);
  CHECK(csv.rfind("from,to,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("travel ranges of the 13-bus and 34-bus feeders") {
  const FeederData f13 = load_feeder(testing::data_path("feeders/ieee13.json"));
  const auto t13 = travel_time_matrix(f13.network, f13.transport, 141.0);
  CHECK(t13.min() == doctest::Approx(0.0071).epsilon(0.01));
  CHECK(t13.max() == doctest::Approx(36.17).epsilon(0.01));

  const FeederData f34 = load_feeder(testing::data_path("feeders/ieee34.json"));
  const auto t34 = travel_time_matrix(f34.network, f34.transport, 4740.0);
  CHECK(t34.min() == doctest::Approx(0.00021).epsilon(0.01));
  CHECK(t34.max() == doctest::Approx(40.825).epsilon(0.01));

  const auto fast = travel_time_matrix(f13.network, 282.0);
  CHECK(fast.max() == doctest::Approx(t13.max() / 2));
  CHECK(fast.sites.size() == 13);
  CHECK(fast.minutes.is_symmetric());
}

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

#ifndef GRIDRESTORE_RANDOM_HPP_
#define GRIDRESTORE_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>

namespace gridrestore {

// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is mixed with
// the multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30, 27,
// 31). Sequences are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, 1) with 53 random bits.
  double uniform();

  // Independent stream for a path of indices below a master seed, e.g.
  // derive(seed, {mean_index, trial}).
  static SplitMix64 derive(std::uint64_t master, std::initializer_list<std::uint64_t> path);

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace gridrestore

#endif  // GRIDRESTORE_RANDOM_HPP_

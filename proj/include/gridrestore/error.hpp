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

#ifndef GRIDRESTORE_ERROR_HPP_
#define GRIDRESTORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gridrestore {

// Coarse failure categories. The C API maps each one onto a distinct status
// code, so keep the two lists in sync.
enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kIo,
  kTopology,
  kUnreachable,
  kTooLarge,
  kInfeasible,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gridrestore

#endif  // GRIDRESTORE_ERROR_HPP_

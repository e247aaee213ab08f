// Copyright 2026 The bhcut Authors.
//
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

#ifndef BHCUT_ERROR_HPP_
#define BHCUT_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bhcut {

enum class ErrorCode {
  kInvalidVertex,
  kConfiguration,
  kParameter,
  kEmptyGraph,
  kBudgetExceeded,
  kSoundness,
  kCertificate,
  kInternal,
};

const char* error_code_name(ErrorCode code);

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a search would examine more subsets than the configured
// work budget allows. `estimate` is the number of subsets it would need.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t estimate, std::uint64_t budget);

  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

}  // namespace bhcut

#endif  // BHCUT_ERROR_HPP_

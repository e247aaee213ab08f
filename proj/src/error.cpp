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

#include "bhcut/error.hpp"

namespace bhcut {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex: return "invalid_vertex";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kEmptyGraph: return "empty_graph";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kSoundness: return "soundness";
    case ErrorCode::kCertificate: return "certificate";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

BudgetExceeded::BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
    : Error(ErrorCode::kBudgetExceeded,
            "search would examine " + std::to_string(estimate) +
                " subsets, work budget is " + std::to_string(budget)),
      estimate_(estimate),
      budget_(budget) {}

}  // namespace bhcut

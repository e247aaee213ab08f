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

#ifndef BHCUT_TOOLS_CLI_HPP_
#define BHCUT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bhcut::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudgetRefused = 3,
  kIoError = 4,
};

// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "BHCUT_OUT_DIR";

// Runs one command line (args excludes the program name). Reports go to
// `out` unless --out or BHCUT_OUT_DIR redirects them to a file; diagnostics
// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhcut::cli

#endif  // BHCUT_TOOLS_CLI_HPP_

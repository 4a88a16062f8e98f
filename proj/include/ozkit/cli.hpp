// Copyright 2026 The ozkit Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ozkit::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // the mathematical property does not hold
  kUsage = 2,    // bad flags, unreadable file, schema error
};

// Runs one invocation. args[0] is the program name. Reports go to out,
// diagnostics to err; artifacts are written with write-then-rename.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ozkit::cli

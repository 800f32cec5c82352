// Copyright 2026 The RelayLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELAYLAB_TOOLS_CLI_H_
#define RELAYLAB_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace relaylab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainFailure = 1,
  kUsageFailure = 2,
  kVerificationFailure = 3,
};

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace relaylab::cli

#endif  // RELAYLAB_TOOLS_CLI_H_

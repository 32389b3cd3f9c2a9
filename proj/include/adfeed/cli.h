// Copyright 2026 The Authors.
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


// Command-line front end. Subcommands:
//
//   gen        write a generated instance
//   solve      run one solver on an instance file
//   bench      run a suite and write the BenchRow CSV
//   verify     check an allocation file against an instance file
//   slots-cdf  cumulative distribution of occupied slot indices
//
// Exit codes: 0 success, 1 usage, 2 validation failure, 3 guard or timeout.

#ifndef ADFEED_CLI_H_
#define ADFEED_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace adfeed {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitGuard = 3;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace adfeed

#endif  // ADFEED_CLI_H_

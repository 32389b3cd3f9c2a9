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

#include "adfeed/solve_report.h"

#include "adfeed/objective.h"

namespace adfeed {

Deadline Deadline::After(double seconds) {
  Deadline d;
  d.limit_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds));
  return d;
}

SolveReport MakeReport(std::string algorithm, const ProblemInstance& inst,
                       Allocation alloc, Deadline::Clock::time_point start,
                       const SolveCounters& counters) {
  SolveReport report{std::move(algorithm), std::move(alloc), 0.0, 0.0,
                     counters};
  report.seconds =
      std::chrono::duration<double>(Deadline::Clock::now() - start).count();
  report.expected_reward = ExpectedReward(inst, report.allocation);
  return report;
}

}  // namespace adfeed

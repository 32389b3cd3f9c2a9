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

#ifndef ADFEED_SOLVE_REPORT_H_
#define ADFEED_SOLVE_REPORT_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "adfeed/allocation.h"
#include "adfeed/instance.h"

namespace adfeed {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit exceeded") {}
};

// Cooperative wall-clock limit. Solvers call Check() from their outer loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline After(double seconds);

  bool Expired() const { return limit_ && Clock::now() >= *limit_; }
  void Check() const {
    if (Expired()) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> limit_;
};

struct SolveOptions {
  Deadline deadline;
  // Hard stop after this many commits (greedy and online solvers only).
  std::optional<int> max_ads;
};

struct SolveCounters {
  std::int64_t iterations = 0;
  std::int64_t gain_evaluations = 0;
  std::int64_t reassignments = 0;
};

struct SolveReport {
  std::string algorithm;
  Allocation allocation;
  // Always recomputed from `allocation` by ExpectedReward().
  double expected_reward = 0.0;
  double seconds = 0.0;
  SolveCounters counters;
};

// Scores `alloc` with the true objective and stamps the elapsed time.
SolveReport MakeReport(std::string algorithm, const ProblemInstance& inst,
                       Allocation alloc, Deadline::Clock::time_point start,
                       const SolveCounters& counters);

}  // namespace adfeed

#endif  // ADFEED_SOLVE_REPORT_H_

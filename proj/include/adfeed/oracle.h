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

// Ground truth for small instances: exhaustive solvers and a Monte-Carlo
// simulation of user sessions.

#ifndef ADFEED_ORACLE_H_
#define ADFEED_ORACLE_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "adfeed/allocation.h"
#include "adfeed/instance.h"
#include "adfeed/random.h"

namespace adfeed {

class GuardExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Allocation allocation;
  double value = 0.0;
  std::int64_t evaluated = 0;
};

inline constexpr std::size_t kBruteForceMaxEdges = 24;
inline constexpr int kBruteForceMaxSide = 8;
inline constexpr int kBruteForceMaxMappingSlots = 16;

// Enumerates every matching. Refuses (GuardExceededError) unless
// |E| <= 24 and min(n, m) <= 8.
OracleResult BruteForceMatching(const ProblemInstance& inst);

// Enumerates every set of occupied slots, filling each with its most
// rewarding ad; for a fixed occupied set the objective separates per slot.
// Refuses unless m <= 16.
OracleResult BruteForceMapping(const ProblemInstance& inst);

struct ViewedElement {
  enum class Kind { kItem, kAd };
  Kind kind;
  int slot;
  int ad;  // 0 for items
};

struct SessionTrace {
  // In feed order: item 1, [ad at slot 1], item 2, ...
  std::vector<ViewedElement> viewed;
  // True if the user quit, false if the feed ran out first.
  bool quit = false;
  double reward = 0.0;
};

// One session: the user views item j, then the slot-j ad if any, and after
// every viewed element quits with probability q. Ad rewards are collected
// when the ad is viewed.
SessionTrace SimulateSession(const ProblemInstance& inst,
                             const Allocation& alloc, Rng& rng);

struct SimulationResult {
  double mean = 0.0;
  double standard_error = 0.0;
  std::int64_t sessions = 0;
};

inline constexpr std::int64_t kSessionsPerChunk = 1 << 16;

// Mean reward over `sessions` sessions. Sessions are grouped in fixed chunks,
// chunk c drawing from Rng(DeriveSeed(seed, c)); chunks are merged in order,
// so the result does not depend on `workers`.
SimulationResult SimulateSessions(const ProblemInstance& inst,
                                  const Allocation& alloc,
                                  std::int64_t sessions, std::uint64_t seed,
                                  int workers = 1);

}  // namespace adfeed

#endif  // ADFEED_ORACLE_H_

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

// Limits on the total number of ads shown.

#ifndef ADFEED_POSTPROCESS_H_
#define ADFEED_POSTPROCESS_H_

#include "adfeed/allocation.h"
#include "adfeed/instance.h"
#include "adfeed/solve_report.h"

namespace adfeed {

// Removes one entry at a time, each time the one whose removal leaves the
// highest expected reward (a removal may even raise it, since later ads
// regain attention), until at most k entries remain. Losses are recomputed
// after every removal; ties drop the highest slot.
Allocation PruneToK(const ProblemInstance& inst, const Allocation& alloc,
                    int k);

enum class TruncatableSolver { kGlobalGreedy, kForwardGreedy, kOnlineThreshold };

// Runs `solver` with a hard stop after k commits. `threshold` is used by the
// online threshold solver only.
SolveReport TruncateGreedyRun(TruncatableSolver solver,
                              const ProblemInstance& inst, int k,
                              double threshold = 0.0,
                              const SolveOptions& options = {});

}  // namespace adfeed

#endif  // ADFEED_POSTPROCESS_H_

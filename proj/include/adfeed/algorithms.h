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

// Backwards greedy allocation.
//
// Both solvers sweep the slots from the bottom of the feed (j = m) to the top
// (j = 1). Placing an ad at slot j never changes the attention available to
// slots above j, so each step only has to reason about the suffix j..m.
//
// BackwardsGreedy picks, at every slot, the candidate ad with the largest
// exact marginal gain f_{j-1}(M_i)/(1-q) - f_j(M), where M_i is M with ad i
// moved (matching) or copied (mapping) to slot j. With ad reuse this is an
// exact solver; under the matching constraint it is a 2-approximation.
//
// NonObliviousBackwardsGreedy ranks candidates by a lower bound on that gain,
//
//   r_ij - q f_j(M) - tau_i (1-q)^(sigma(i) - j),
//
// where sigma(i) is the slot ad i currently holds (j if unmatched) and
// tau_i = r_i,sigma(i) - q f_sigma(i)(M) is the gain the ad contributed when
// it was last placed. It is a 2-approximation and avoids re-evaluating the
// objective for every candidate.

#ifndef ADFEED_ALGORITHMS_H_
#define ADFEED_ALGORITHMS_H_

#include <optional>
#include <utility>
#include <vector>

#include "adfeed/allocation.h"
#include "adfeed/instance.h"
#include "adfeed/solve_report.h"

namespace adfeed {

// Lowest ad index wins ties; a move is committed only for a gain > 0.
SolveReport BackwardsGreedy(const ProblemInstance& inst, AllocationMode mode,
                            const SolveOptions& options = {});

SolveReport NonObliviousBackwardsGreedy(const ProblemInstance& inst,
                                        const SolveOptions& options = {});

// Per-ad bookkeeping of the non-oblivious solver.
struct TauState {
  // tau[i] for i = 1..n; meaningful only while ad i is matched.
  std::vector<double> tau;
  // slot[i] = sigma(i), or 0 when ad i is unmatched.
  std::vector<int> slot;
};

// One record per processed slot, emitted for j = m..1.
struct IterationLog {
  int slot = 0;
  std::vector<int> candidates;
  // Argmax of the selection criterion, if slot had any candidate.
  std::optional<int> best_ad;
  // Exact gain (backwards greedy) or lower bound (non-oblivious) of best_ad.
  double gain = 0.0;
  bool committed = false;
  bool reassigned = false;
  // f_j(M) before the step.
  double suffix_before = 0.0;
  // f_{j-1}(M_after)/(1-q) - f_j(M_before); zero when nothing was committed.
  double exact_gain = 0.0;
  // f_0(M)..f_m(M) after the step.
  std::vector<double> suffix_after;
  std::vector<Assignment> matching_after;
  // Non-oblivious solver only.
  TauState tau_after;
};

enum class BackwardsVariant { kGreedyMapping, kGreedyMatching, kNonOblivious };

struct InstrumentedResult {
  SolveReport report;
  std::vector<IterationLog> log;
};

InstrumentedResult InstrumentedRun(BackwardsVariant variant,
                                   const ProblemInstance& inst);

}  // namespace adfeed

#endif  // ADFEED_ALGORITHMS_H_

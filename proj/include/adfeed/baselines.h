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

// Comparison solvers for the matching variant. Every solver returns a
// matching scored with the true expected reward.

#ifndef ADFEED_BASELINES_H_
#define ADFEED_BASELINES_H_

#include <optional>

#include "adfeed/instance.h"
#include "adfeed/solve_report.h"

namespace adfeed {

// Lazily evaluated candidate of the global greedy heap.
struct CandidateBound {
  int ad;
  int slot;
  // Marginal gain at the time it was computed; an upper bound afterwards.
  double bound;
  // Number of commits when `bound` was computed.
  int stamp;
};

// Repeatedly commits the unused (ad, slot) pair with the largest exact
// marginal gain f(M + e) - f(M) while that gain is positive. Ties go to the
// smallest (slot, ad). Positive gains only shrink as the matching grows, so
// cached gains act as upper bounds and only the heap top is re-evaluated.
// Honors options.max_ads.
SolveReport GlobalGreedy(const ProblemInstance& inst,
                         const SolveOptions& options = {});

// Top-down: each slot gets the unused ad with the largest positive reward.
// Honors options.max_ads.
SolveReport ForwardGreedy(const ProblemInstance& inst,
                          const SolveOptions& options = {});

// Top-down: each slot gets the best unused ad iff its reward exceeds
// `threshold`. Honors options.max_ads.
SolveReport OnlineThreshold(const ProblemInstance& inst, double threshold,
                            const SolveOptions& options = {});

// Largest reward of an edge at slot 1, or 0 if slot 1 has no edges.
double AutoThreshold(const ProblemInstance& inst);

// Maximum-weight matching with static weights r_ij (1-q)^j.
SolveReport MwmBaseline(const ProblemInstance& inst,
                        const SolveOptions& options = {});

// floor((1-q)/q), or min(n, m) when q = 0.
int FlowCardinality(const ProblemInstance& inst);

// MwmBaseline restricted to at most FlowCardinality() pairs (further capped
// by `max_cardinality` when given), solved as a min-cost flow.
SolveReport FlowBaseline(const ProblemInstance& inst,
                         std::optional<int> max_cardinality = std::nullopt,
                         const SolveOptions& options = {});

// FlowBaseline followed by a bottom-up sweep over the remaining slots with
// the backwards greedy rule: the flow entries stay fixed, every other ad is
// a candidate (moving it up if the sweep already placed it) and the best one
// is committed if its gain is positive.
SolveReport FlowGreedy(const ProblemInstance& inst,
                       const SolveOptions& options = {});

}  // namespace adfeed

#endif  // ADFEED_BASELINES_H_

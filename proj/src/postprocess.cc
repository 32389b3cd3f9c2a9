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

#include "adfeed/postprocess.h"

#include <vector>

#include "adfeed/baselines.h"
#include "adfeed/objective.h"

namespace adfeed {

Allocation PruneToK(const ProblemInstance& inst, const Allocation& alloc,
                    int k) {
  if (k < 0) k = 0;
  std::vector<ScoredEntry> scored = ScoreEntries(inst, alloc);
  std::vector<Assignment> entries(alloc.entries().begin(),
                                  alloc.entries().end());
  const Discount discount(inst.quit_prob(), 2 * inst.num_slots() + 2);
  std::vector<ScoredEntry> without;
  while (static_cast<int>(scored.size()) > k) {
    std::size_t drop = 0;
    double best = 0.0;
    for (std::size_t c = 0; c < scored.size(); ++c) {
      without.clear();
      for (std::size_t t = 0; t < scored.size(); ++t) {
        if (t != c) without.push_back(scored[t]);
      }
      const double value = SuffixValue(without, 0, discount);
      // Ascending slots, so ">=" leaves the highest slot on ties.
      if (c == 0 || value >= best) {
        best = value;
        drop = c;
      }
    }
    scored.erase(scored.begin() + static_cast<std::ptrdiff_t>(drop));
    entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return Allocation(alloc.mode(), std::move(entries));
}

SolveReport TruncateGreedyRun(TruncatableSolver solver,
                              const ProblemInstance& inst, int k,
                              double threshold, const SolveOptions& options) {
  SolveOptions limited = options;
  limited.max_ads = k;
  switch (solver) {
    case TruncatableSolver::kGlobalGreedy:
      return GlobalGreedy(inst, limited);
    case TruncatableSolver::kForwardGreedy:
      return ForwardGreedy(inst, limited);
    case TruncatableSolver::kOnlineThreshold:
      return OnlineThreshold(inst, threshold, limited);
  }
  return GlobalGreedy(inst, limited);
}

}  // namespace adfeed

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

#include "adfeed/baselines.h"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "adfeed/matching.h"
#include "adfeed/objective.h"
#include "working_allocation.h"

namespace adfeed {

namespace {

using internal::WorkingAllocation;

// Heap order: larger bound first, then smaller (slot, ad).
struct BoundOrder {
  bool operator()(const CandidateBound& a, const CandidateBound& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.slot != b.slot) return a.slot > b.slot;
    return a.ad > b.ad;
  }
};

// f(M + (slot, reward)) - f(M), with f(M) = `current`.
double GainOfAdding(std::span<const ScoredEntry> scored, int slot,
                    double reward, double current, const Discount& discount,
                    std::vector<ScoredEntry>& buffer) {
  buffer.assign(scored.begin(), scored.end());
  auto it = std::lower_bound(
      buffer.begin(), buffer.end(), slot,
      [](const ScoredEntry& e, int value) { return e.slot < value; });
  buffer.insert(it, {slot, reward});
  return SuffixValue(buffer, 0, discount) - current;
}

bool BudgetLeft(const SolveOptions& options, std::size_t committed) {
  return !options.max_ads ||
         committed < static_cast<std::size_t>(std::max(*options.max_ads, 0));
}

SolveReport TopDown(const ProblemInstance& inst, double threshold,
                    std::string name, const SolveOptions& options) {
  RequireValid(inst);
  const auto start = Deadline::Clock::now();
  WorkingAllocation work(inst.num_ads(), inst.num_slots(),
                         AllocationMode::kMatching);
  std::vector<char> used(inst.num_ads() + 1, 0);
  SolveCounters counters;
  for (int j = 1; j <= inst.num_slots() && BudgetLeft(options, work.size());
       ++j) {
    options.deadline.Check();
    ++counters.iterations;
    int best_ad = 0;
    double best_reward = 0.0;
    for (const AdReward& c : inst.ads_at(j)) {
      ++counters.gain_evaluations;
      if (used[c.ad]) continue;
      if (best_ad == 0 || c.reward > best_reward) {
        best_ad = c.ad;
        best_reward = c.reward;
      }
    }
    if (best_ad != 0 && best_reward > threshold) {
      work.Place(j, best_ad, best_reward);
      used[best_ad] = 1;
    }
  }
  return MakeReport(std::move(name), inst, work.ToAllocation(), start,
                    counters);
}

std::vector<WeightedPair> PositionWeights(const ProblemInstance& inst) {
  const Discount discount(inst.quit_prob());
  std::vector<WeightedPair> pairs;
  pairs.reserve(inst.num_edges());
  for (int j = 1; j <= inst.num_slots(); ++j) {
    const double factor = discount(j);
    for (const AdReward& c : inst.ads_at(j)) {
      pairs.push_back({c.ad, j, c.reward * factor});
    }
  }
  return pairs;
}

Allocation ToAllocation(const MatchingResult& matching) {
  std::vector<Assignment> entries;
  entries.reserve(matching.pairs.size());
  for (const auto& [ad, slot] : matching.pairs) entries.push_back({slot, ad});
  return Allocation(AllocationMode::kMatching, std::move(entries));
}

WorkingAllocation SolveFlow(const ProblemInstance& inst,
                            std::optional<int> max_cardinality,
                            const SolveOptions& options,
                            SolveCounters& counters) {
  int k = FlowCardinality(inst);
  if (max_cardinality) k = std::min(k, std::max(*max_cardinality, 0));
  const auto pairs = PositionWeights(inst);
  const auto matching = ConstrainedMaxWeightMatching(
      inst.num_ads(), inst.num_slots(), pairs, k, options.deadline);
  counters.iterations +=
      static_cast<std::int64_t>(matching.augmentation_gains.size());
  WorkingAllocation work(inst.num_ads(), inst.num_slots(),
                         AllocationMode::kMatching);
  for (const auto& [ad, slot] : matching.pairs) {
    work.Place(slot, ad, *inst.reward(ad, slot));
  }
  return work;
}

}  // namespace

SolveReport GlobalGreedy(const ProblemInstance& inst,
                         const SolveOptions& options) {
  RequireValid(inst);
  const auto start = Deadline::Clock::now();
  const int m = inst.num_slots();
  const Discount discount(inst.quit_prob(), 2 * m + 2);
  WorkingAllocation work(inst.num_ads(), m, AllocationMode::kMatching);
  std::vector<char> used_ad(inst.num_ads() + 1, 0);
  SolveCounters counters;

  std::priority_queue<CandidateBound, std::vector<CandidateBound>, BoundOrder>
      heap;
  std::vector<CandidateBound> initial;
  initial.reserve(inst.num_edges());
  std::vector<ScoredEntry> buffer;
  for (int j = 1; j <= m; ++j) {
    for (const AdReward& c : inst.ads_at(j)) {
      const double gain = GainOfAdding({}, j, c.reward, 0.0, discount, buffer);
      ++counters.gain_evaluations;
      if (gain > 0.0) initial.push_back({c.ad, j, gain, 0});
    }
  }
  heap = decltype(heap)(BoundOrder(), std::move(initial));

  double current = 0.0;
  int commits = 0;
  std::int64_t pops = 0;
  while (!heap.empty() && BudgetLeft(options, work.size())) {
    if ((++pops & 1023) == 0) options.deadline.Check();
    CandidateBound top = heap.top();
    heap.pop();
    if (used_ad[top.ad] || work.ad_at(top.slot) != 0) continue;
    if (top.stamp != commits) {
      const double gain = GainOfAdding(work.scored(), top.slot,
                                       *inst.reward(top.ad, top.slot), current,
                                       discount, buffer);
      ++counters.gain_evaluations;
      // A non-positive gain never turns positive again.
      if (gain > 0.0) heap.push({top.ad, top.slot, gain, commits});
      continue;
    }
    work.Place(top.slot, top.ad, *inst.reward(top.ad, top.slot));
    used_ad[top.ad] = 1;
    current = SuffixValue(work.scored(), 0, discount);
    ++commits;
    ++counters.iterations;
  }
  return MakeReport("global", inst, work.ToAllocation(), start, counters);
}

SolveReport ForwardGreedy(const ProblemInstance& inst,
                          const SolveOptions& options) {
  return TopDown(inst, 0.0, "forward", options);
}

SolveReport OnlineThreshold(const ProblemInstance& inst, double threshold,
                            const SolveOptions& options) {
  return TopDown(inst, threshold, "threshold", options);
}

double AutoThreshold(const ProblemInstance& inst) {
  double best = 0.0;
  for (const AdReward& c : inst.ads_at(1)) best = std::max(best, c.reward);
  return best;
}

SolveReport MwmBaseline(const ProblemInstance& inst,
                        const SolveOptions& options) {
  RequireValid(inst);
  const auto start = Deadline::Clock::now();
  const auto pairs = PositionWeights(inst);
  const auto matching = MaxWeightMatching(inst.num_ads(), inst.num_slots(),
                                          pairs, options.deadline);
  SolveCounters counters;
  counters.iterations =
      static_cast<std::int64_t>(matching.augmentation_gains.size());
  return MakeReport("mwm", inst, ToAllocation(matching), start, counters);
}

int FlowCardinality(const ProblemInstance& inst) {
  const int cap = std::min(inst.num_ads(), inst.num_slots());
  const double q = inst.quit_prob();
  if (q <= 0.0) return cap;
  // The epsilon absorbs ratios such as 0.95/0.05 = 18.999999999999996.
  const double ratio = std::floor((1.0 - q) / q + 1e-9);
  if (ratio >= cap) return cap;
  return static_cast<int>(ratio);
}

SolveReport FlowBaseline(const ProblemInstance& inst,
                         std::optional<int> max_cardinality,
                         const SolveOptions& options) {
  RequireValid(inst);
  const auto start = Deadline::Clock::now();
  SolveCounters counters;
  auto work = SolveFlow(inst, max_cardinality, options, counters);
  return MakeReport("flow", inst, work.ToAllocation(), start, counters);
}

SolveReport FlowGreedy(const ProblemInstance& inst,
                       const SolveOptions& options) {
  RequireValid(inst);
  const auto start = Deadline::Clock::now();
  const int m = inst.num_slots();
  SolveCounters counters;
  auto work = SolveFlow(inst, std::nullopt, options, counters);
  // Flow entries stay fixed; ads placed by the sweep may move up later.
  std::vector<char> fixed(inst.num_ads() + 1, 0);
  for (const Assignment& a : work.Entries()) fixed[a.ad] = 1;

  const Discount discount(inst.quit_prob(), 2 * m + 2);
  std::vector<ScoredEntry> buffer;
  double current = SuffixValue(work.scored(), 0, discount);
  for (int j = m; j >= 1; --j) {
    options.deadline.Check();
    ++counters.iterations;
    if (work.ad_at(j) != 0) continue;
    double best_gain = -std::numeric_limits<double>::infinity();
    int best_ad = 0;
    double best_reward = 0.0;
    for (const AdReward& c : inst.ads_at(j)) {
      if (fixed[c.ad]) continue;
      buffer.clear();
      const int old_slot = work.slot_of(c.ad);
      for (const ScoredEntry& e : work.scored()) {
        if (e.slot != old_slot) buffer.push_back(e);
      }
      auto it = std::lower_bound(
          buffer.begin(), buffer.end(), j,
          [](const ScoredEntry& e, int value) { return e.slot < value; });
      buffer.insert(it, {j, c.reward});
      // Every occupied slot before j is untouched, so this exact gain is a
      // positive multiple of the suffix gain used by backwards greedy.
      const double gain = SuffixValue(buffer, 0, discount) - current;
      ++counters.gain_evaluations;
      if (gain > best_gain) {
        best_gain = gain;
        best_ad = c.ad;
        best_reward = c.reward;
      }
    }
    if (best_ad != 0 && best_gain > 0.0) {
      if (const int old_slot = work.slot_of(best_ad); old_slot != 0) {
        work.RemoveSlot(old_slot);
        ++counters.reassignments;
      }
      work.Place(j, best_ad, best_reward);
      current = SuffixValue(work.scored(), 0, discount);
    }
  }
  return MakeReport("flow-greedy", inst, work.ToAllocation(), start,
                    counters);
}

}  // namespace adfeed

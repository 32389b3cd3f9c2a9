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

#include "adfeed/algorithms.h"

#include <limits>

#include "adfeed/objective.h"
#include "working_allocation.h"

namespace adfeed {

namespace {

using internal::WorkingAllocation;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// f_{slot}(M) for every entry of `scored`, by one backward pass.
std::vector<double> SuffixAtEntries(std::span<const ScoredEntry> scored,
                                    const Discount& discount) {
  const double q = 1.0 - discount.survival();
  std::vector<double> out(scored.size(), 0.0);
  double value = 0.0;  // f_{slot of entry k}
  for (std::size_t k = scored.size(); k-- > 0;) {
    if (k + 1 < scored.size()) {
      // f_{s_{k+1} - 1} from f_{s_{k+1}}, then decay through empty slots.
      const ScoredEntry& next = scored[k + 1];
      const double above =
          discount.survival() * (value + next.reward - q * value);
      value = above * discount(next.slot - 1 - scored[k].slot);
    }
    out[k] = value;
  }
  return out;
}

void FillSnapshot(const WorkingAllocation& work, int num_slots, double q,
                  IterationLog& record) {
  record.suffix_after = SuffixValues(work.scored(), num_slots, q);
  record.matching_after = work.Entries();
}

SolveReport RunBackwardsGreedy(const ProblemInstance& inst,
                               AllocationMode mode,
                               const SolveOptions& options,
                               std::vector<IterationLog>* log) {
  RequireValid(inst);
  const auto start = Deadline::Clock::now();
  const int m = inst.num_slots();
  const double q = inst.quit_prob();
  const double s = 1.0 - q;
  const Discount discount(q, 2 * m + 2);
  const bool matching = mode == AllocationMode::kMatching;

  WorkingAllocation work(inst.num_ads(), m, mode);
  SolveCounters counters;
  std::vector<ScoredEntry> candidate;

  for (int j = m; j >= 1; --j) {
    options.deadline.Check();
    ++counters.iterations;
    const double suffix = SuffixValue(work.scored(), j, discount);

    double best_gain = kNegInf;
    int best_ad = 0;
    double best_reward = 0.0;
    int best_vacated = 0;
    const auto ads = inst.ads_at(j);
    for (const AdReward& c : ads) {
      // Slot j lies above every occupied slot, so it goes first.
      const int vacated = matching ? work.slot_of(c.ad) : 0;
      candidate.clear();
      candidate.push_back({j, c.reward});
      for (const ScoredEntry& e : work.scored()) {
        if (e.slot != vacated) candidate.push_back(e);
      }
      const double gain = SuffixValue(candidate, j - 1, discount) / s - suffix;
      ++counters.gain_evaluations;
      if (gain > best_gain) {
        best_gain = gain;
        best_ad = c.ad;
        best_reward = c.reward;
        best_vacated = vacated;
      }
    }

    const bool commit = best_ad != 0 && best_gain > 0.0;
    if (commit) {
      if (best_vacated != 0) {
        work.RemoveSlot(best_vacated);
        ++counters.reassignments;
      }
      work.Place(j, best_ad, best_reward);
    }

    if (log != nullptr) {
      IterationLog record;
      record.slot = j;
      for (const AdReward& c : ads) record.candidates.push_back(c.ad);
      if (best_ad != 0) {
        record.best_ad = best_ad;
        record.gain = best_gain;
      }
      record.committed = commit;
      record.reassigned = commit && best_vacated != 0;
      record.suffix_before = suffix;
      if (commit) {
        record.exact_gain =
            SuffixValue(work.scored(), j - 1, discount) / s - suffix;
      }
      FillSnapshot(work, m, q, record);
      log->push_back(std::move(record));
    }
  }
  return MakeReport(matching ? "gb" : "gb-mapping", inst, work.ToAllocation(),
                    start, counters);
}

SolveReport RunNonOblivious(const ProblemInstance& inst,
                            const SolveOptions& options,
                            std::vector<IterationLog>* log) {
  RequireValid(inst);
  const auto start = Deadline::Clock::now();
  const int n = inst.num_ads();
  const int m = inst.num_slots();
  const double q = inst.quit_prob();
  const double s = 1.0 - q;
  const Discount discount(q, 2 * m + 2);

  WorkingAllocation work(n, m, AllocationMode::kMatching);
  std::vector<double> tau(n + 1, 0.0);
  SolveCounters counters;

  // Invariant at the top of iteration j: suffix == f_j(M).
  double suffix = 0.0;
  for (int j = m; j >= 1; --j) {
    options.deadline.Check();
    ++counters.iterations;

    double best_score = kNegInf;
    int best_ad = 0;
    double best_reward = 0.0;
    double best_carry = 0.0;
    const auto ads = inst.ads_at(j);
    for (const AdReward& c : ads) {
      const int held = work.slot_of(c.ad);
      const int sigma = held != 0 ? held : j;
      const double carry = tau[c.ad] * discount(sigma - j);
      const double score = c.reward - carry;
      ++counters.gain_evaluations;
      if (score > best_score) {
        best_score = score;
        best_ad = c.ad;
        best_reward = c.reward;
        best_carry = carry;
      }
    }

    const double suffix_before = suffix;
    double lower_bound = 0.0;
    bool commit = false;
    bool reassigned = false;
    if (best_ad != 0) {
      lower_bound = best_reward - q * suffix - best_carry;
      commit = lower_bound > 0.0;
    }
    if (commit) {
      const int held = work.slot_of(best_ad);
      reassigned = held != 0;
      if (reassigned) {
        work.RemoveSlot(held);
        ++counters.reassignments;
      }
      work.Place(j, best_ad, best_reward);
      // f_j(M) after the update; unchanged unless a slot below j emptied.
      if (reassigned) suffix = SuffixValue(work.scored(), j, discount);
      tau[best_ad] = best_reward - q * suffix;
      if (reassigned) {
        const auto scored = work.scored();
        const auto at_entries = SuffixAtEntries(scored, discount);
        for (std::size_t k = 0; k < scored.size(); ++k) {
          const int ad = work.ad_at(scored[k].slot);
          tau[ad] = scored[k].reward - q * at_entries[k];
        }
      }
    }

    if (log != nullptr) {
      IterationLog record;
      record.slot = j;
      for (const AdReward& c : ads) record.candidates.push_back(c.ad);
      if (best_ad != 0) {
        record.best_ad = best_ad;
        record.gain = lower_bound;
      }
      record.committed = commit;
      record.reassigned = reassigned;
      record.suffix_before = suffix_before;
      if (commit) {
        record.exact_gain =
            SuffixValue(work.scored(), j - 1, discount) / s - suffix_before;
      }
      FillSnapshot(work, m, q, record);
      record.tau_after.tau.assign(n + 1, 0.0);
      record.tau_after.slot.assign(n + 1, 0);
      for (int ad = 1; ad <= n; ++ad) {
        if (work.slot_of(ad) != 0) {
          record.tau_after.tau[ad] = tau[ad];
          record.tau_after.slot[ad] = work.slot_of(ad);
        }
      }
      log->push_back(std::move(record));
    }

    // Step to f_{j-1}(M).
    const int here = work.ad_at(j);
    double occupied_term = 0.0;
    if (here != 0) occupied_term = best_reward - q * suffix;
    suffix = s * (suffix + occupied_term);
  }
  return MakeReport("gbp", inst, work.ToAllocation(), start, counters);
}

}  // namespace

SolveReport BackwardsGreedy(const ProblemInstance& inst, AllocationMode mode,
                            const SolveOptions& options) {
  return RunBackwardsGreedy(inst, mode, options, nullptr);
}

SolveReport NonObliviousBackwardsGreedy(const ProblemInstance& inst,
                                        const SolveOptions& options) {
  return RunNonOblivious(inst, options, nullptr);
}

InstrumentedResult InstrumentedRun(BackwardsVariant variant,
                                   const ProblemInstance& inst) {
  InstrumentedResult result;
  switch (variant) {
    case BackwardsVariant::kGreedyMapping:
      result.report =
          RunBackwardsGreedy(inst, AllocationMode::kMapping, {}, &result.log);
      break;
    case BackwardsVariant::kGreedyMatching:
      result.report =
          RunBackwardsGreedy(inst, AllocationMode::kMatching, {}, &result.log);
      break;
    case BackwardsVariant::kNonOblivious:
      result.report = RunNonOblivious(inst, {}, &result.log);
      break;
  }
  return result;
}

}  // namespace adfeed

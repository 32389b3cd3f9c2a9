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

// Mutable allocation used inside solvers. Keeps the slot-sorted reward list
// that SuffixValue() consumes next to O(1) slot/ad lookups.

#ifndef ADFEED_SRC_WORKING_ALLOCATION_H_
#define ADFEED_SRC_WORKING_ALLOCATION_H_

#include <algorithm>
#include <span>
#include <vector>

#include "adfeed/allocation.h"
#include "adfeed/objective.h"

namespace adfeed::internal {

class WorkingAllocation {
 public:
  WorkingAllocation(int num_ads, int num_slots, AllocationMode mode)
      : mode_(mode), ad_at_(num_slots + 2, 0), slot_of_(num_ads + 2, 0) {}

  AllocationMode mode() const { return mode_; }
  std::span<const ScoredEntry> scored() const { return scored_; }
  std::size_t size() const { return scored_.size(); }

  int ad_at(int slot) const { return ad_at_[slot]; }
  // Slot held by `ad` in matching mode, 0 if none. Not tracked for mappings.
  int slot_of(int ad) const { return slot_of_[ad]; }

  void Place(int slot, int ad, double reward) {
    auto it = std::lower_bound(
        scored_.begin(), scored_.end(), slot,
        [](const ScoredEntry& e, int value) { return e.slot < value; });
    scored_.insert(it, {slot, reward});
    ad_at_[slot] = ad;
    if (mode_ == AllocationMode::kMatching) slot_of_[ad] = slot;
  }

  void RemoveSlot(int slot) {
    auto it = std::lower_bound(
        scored_.begin(), scored_.end(), slot,
        [](const ScoredEntry& e, int value) { return e.slot < value; });
    if (it == scored_.end() || it->slot != slot) return;
    scored_.erase(it);
    const int ad = ad_at_[slot];
    ad_at_[slot] = 0;
    if (mode_ == AllocationMode::kMatching && slot_of_[ad] == slot) {
      slot_of_[ad] = 0;
    }
  }

  std::vector<Assignment> Entries() const {
    std::vector<Assignment> out;
    out.reserve(scored_.size());
    for (const ScoredEntry& e : scored_) out.push_back({e.slot, ad_at_[e.slot]});
    return out;
  }

  Allocation ToAllocation() const { return Allocation(mode_, Entries()); }

 private:
  AllocationMode mode_;
  std::vector<ScoredEntry> scored_;
  std::vector<int> ad_at_;
  std::vector<int> slot_of_;
};

}  // namespace adfeed::internal

#endif  // ADFEED_SRC_WORKING_ALLOCATION_H_

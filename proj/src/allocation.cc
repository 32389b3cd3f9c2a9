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

#include "adfeed/allocation.h"

#include <algorithm>
#include <set>

namespace adfeed {

const char* ModeName(AllocationMode mode) {
  return mode == AllocationMode::kMapping ? "mapping" : "matching";
}

Allocation::Allocation(AllocationMode mode, std::vector<Assignment> entries)
    : mode_(mode), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t k = 1; k < entries_.size(); ++k) {
    if (entries_[k].slot == entries_[k - 1].slot) {
      throw InvalidAllocationError("slot " + std::to_string(entries_[k].slot) +
                                   " holds more than one ad");
    }
  }
  if (mode_ == AllocationMode::kMatching) {
    std::set<int> seen;
    for (const Assignment& a : entries_) {
      if (!seen.insert(a.ad).second) {
        throw InvalidAllocationError("ad " + std::to_string(a.ad) +
                                     " used twice in a matching");
      }
    }
  }
}

std::optional<int> Allocation::ad_at(int slot) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), slot,
      [](const Assignment& a, int value) { return a.slot < value; });
  if (it == entries_.end() || it->slot != slot) return std::nullopt;
  return it->ad;
}

int Allocation::ads_before(int slot) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), slot,
      [](const Assignment& a, int value) { return a.slot < value; });
  return static_cast<int>(it - entries_.begin());
}

Allocation Allocation::With(Assignment entry) const {
  std::vector<Assignment> next = entries_;
  next.push_back(entry);
  return Allocation(mode_, std::move(next));
}

Allocation Allocation::Without(int slot) const {
  std::vector<Assignment> next;
  next.reserve(entries_.size());
  for (const Assignment& a : entries_) {
    if (a.slot != slot) next.push_back(a);
  }
  Allocation out(mode_);
  out.entries_ = std::move(next);
  return out;
}

std::vector<std::string> ValidateAllocation(const ProblemInstance& inst,
                                            const Allocation& alloc) {
  std::vector<std::string> problems;
  for (const Assignment& a : alloc.entries()) {
    const std::string label =
        "(" + std::to_string(a.ad) + "," + std::to_string(a.slot) + ")";
    if (a.slot < 1 || a.slot > inst.num_slots()) {
      problems.push_back("slot out of range in entry " + label);
    } else if (!inst.reward(a.ad, a.slot)) {
      problems.push_back("entry " + label + " is not an edge of the instance");
    }
  }
  return problems;
}

}  // namespace adfeed

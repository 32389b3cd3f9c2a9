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

#ifndef ADFEED_ALLOCATION_H_
#define ADFEED_ALLOCATION_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "adfeed/instance.h"

namespace adfeed {

// Mapping: an ad may fill several slots. Matching: each ad at most once.
enum class AllocationMode { kMapping, kMatching };

const char* ModeName(AllocationMode mode);

struct Assignment {
  int slot = 0;
  int ad = 0;

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

class InvalidAllocationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A slot -> ad assignment with entries kept sorted by slot. The per-slot and
// (in matching mode) per-ad uniqueness invariants are enforced on
// construction; edge existence depends on the instance and is checked by
// ValidateAllocation().
class Allocation {
 public:
  explicit Allocation(AllocationMode mode = AllocationMode::kMatching)
      : mode_(mode) {}
  // Throws InvalidAllocationError on a repeated slot, or a repeated ad in
  // matching mode.
  Allocation(AllocationMode mode, std::vector<Assignment> entries);

  AllocationMode mode() const { return mode_; }
  std::span<const Assignment> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::optional<int> ad_at(int slot) const;
  // Number of occupied slots strictly before `slot`.
  int ads_before(int slot) const;

  // Copies with one entry added / the entry at `slot` dropped.
  Allocation With(Assignment entry) const;
  Allocation Without(int slot) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  AllocationMode mode_;
  std::vector<Assignment> entries_;
};

// Problems with `alloc` relative to `inst` (missing edges, out-of-range
// slots); empty iff valid.
std::vector<std::string> ValidateAllocation(const ProblemInstance& inst,
                                            const Allocation& alloc);

}  // namespace adfeed

#endif  // ADFEED_ALLOCATION_H_

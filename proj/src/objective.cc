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

#include "adfeed/objective.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace adfeed {

Discount::Discount(double quit_prob, int cache_up_to)
    : survival_(1.0 - quit_prob) {
  if (cache_up_to > 0) {
    powers_.resize(cache_up_to + 1);
    for (int k = 0; k <= cache_up_to; ++k) powers_[k] = std::pow(survival_, k);
  }
}

double Discount::operator()(int exponent) const {
  if (exponent >= 0 && exponent < static_cast<int>(powers_.size())) {
    return powers_[exponent];
  }
  return std::pow(survival_, exponent);
}

double SuffixValue(std::span<const ScoredEntry> sorted_entries, int from_slot,
                   const Discount& discount) {
  double total = 0.0;
  int ads_seen = 0;
  for (const ScoredEntry& e : sorted_entries) {
    if (e.slot <= from_slot) continue;
    total += e.reward * discount(e.slot - from_slot + ads_seen);
    ++ads_seen;
  }
  return total;
}

std::vector<double> SuffixValues(std::span<const ScoredEntry> sorted_entries,
                                 int num_slots, double quit_prob) {
  const double s = 1.0 - quit_prob;
  std::vector<double> r(num_slots + 1, 0.0);
  auto it = sorted_entries.rbegin();
  for (int j = num_slots - 1; j >= 0; --j) {
    const double next = r[j + 1];
    double occupied_term = 0.0;
    while (it != sorted_entries.rend() && it->slot > j + 1) ++it;
    if (it != sorted_entries.rend() && it->slot == j + 1) {
      occupied_term = it->reward - quit_prob * next;
    }
    r[j] = s * (next + occupied_term);
  }
  return r;
}

std::vector<ScoredEntry> ScoreEntries(const ProblemInstance& inst,
                                      const Allocation& alloc) {
  std::vector<ScoredEntry> out;
  out.reserve(alloc.size());
  for (const Assignment& a : alloc.entries()) {
    auto r = inst.reward(a.ad, a.slot);
    if (!r) {
      throw InvalidAllocationError(
          "entry (" + std::to_string(a.ad) + "," + std::to_string(a.slot) +
          ") is not an edge of the instance");
    }
    out.push_back({a.slot, *r});
  }
  return out;
}

double ExpectedReward(const ProblemInstance& inst, const Allocation& alloc) {
  return SuffixReward(inst, alloc, 0);
}

double SuffixReward(const ProblemInstance& inst, const Allocation& alloc,
                    int j) {
  if (j < 0 || j > inst.num_slots()) {
    throw std::out_of_range("slot index " + std::to_string(j) +
                            " outside 0.." +
                            std::to_string(inst.num_slots()));
  }
  const auto entries = ScoreEntries(inst, alloc);
  return SuffixValue(entries, j, Discount(inst.quit_prob()));
}

std::vector<DecompositionTerm> Decompose(const ProblemInstance& inst,
                                         const Allocation& alloc, int j) {
  if (j < 0 || j > inst.num_slots()) {
    throw std::out_of_range("slot index " + std::to_string(j) +
                            " outside 0.." +
                            std::to_string(inst.num_slots()));
  }
  const auto entries = ScoreEntries(inst, alloc);
  const double q = inst.quit_prob();
  const Discount discount(q);

  std::vector<DecompositionTerm> terms;
  terms.reserve(inst.num_slots() - j);
  auto it = entries.begin();
  while (it != entries.end() && it->slot <= j) ++it;
  for (int slot = j + 1; slot <= inst.num_slots(); ++slot) {
    DecompositionTerm term;
    term.slot = slot;
    term.discount = discount(slot - j);
    if (it != entries.end() && it->slot == slot) {
      term.occupied = true;
      term.tau = it->reward - q * SuffixValue(entries, slot, discount);
      ++it;
    }
    terms.push_back(term);
  }
  return terms;
}

}  // namespace adfeed

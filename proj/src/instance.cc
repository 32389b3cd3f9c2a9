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

#include "adfeed/instance.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace adfeed {

namespace {

std::string EdgeLabel(const Edge& e) {
  std::ostringstream out;
  out << "(" << e.ad << "," << e.slot << ")";
  return out.str();
}

}  // namespace

ProblemInstance::ProblemInstance(int num_ads, int num_slots, double quit_prob,
                                 std::vector<Edge> edges)
    : num_ads_(num_ads),
      num_slots_(num_slots),
      quit_prob_(quit_prob),
      edges_(std::move(edges)) {
  if (num_ads_ < 0) {
    violations_.push_back({std::nullopt, "num_ads must be non-negative"});
  }
  if (num_slots_ < 0) {
    violations_.push_back({std::nullopt, "num_slots must be non-negative"});
  }
  if (!(quit_prob_ >= 0.0 && quit_prob_ < 1.0)) {
    violations_.push_back({std::nullopt, "quit_prob out of range [0, 1)"});
  }

  const int n = std::max(num_ads_, 0);
  const int m = std::max(num_slots_, 0);

  // Edges that make it into the adjacency index, sorted by (ad, slot).
  std::vector<std::size_t> kept;
  kept.reserve(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    bool ok = true;
    if (e.ad < 1 || e.ad > n) {
      violations_.push_back({k, "ad index out of range in edge " + EdgeLabel(e)});
      ok = false;
    }
    if (e.slot < 1 || e.slot > m) {
      violations_.push_back(
          {k, "slot index out of range in edge " + EdgeLabel(e)});
      ok = false;
    }
    if (!(e.reward >= 0.0) || !std::isfinite(e.reward)) {
      violations_.push_back(
          {k, "reward must be finite and non-negative in edge " + EdgeLabel(e)});
    }
    if (ok) kept.push_back(k);
  }
  std::stable_sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    const Edge& x = edges_[a];
    const Edge& y = edges_[b];
    return x.ad != y.ad ? x.ad < y.ad : x.slot < y.slot;
  });
  std::vector<std::size_t> unique;
  unique.reserve(kept.size());
  for (std::size_t k : kept) {
    if (!unique.empty()) {
      const Edge& prev = edges_[unique.back()];
      if (prev.ad == edges_[k].ad && prev.slot == edges_[k].slot) {
        violations_.push_back(
            {k, "duplicate edge " + EdgeLabel(edges_[k])});
        continue;
      }
    }
    unique.push_back(k);
  }

  ad_offsets_.assign(n + 2, 0);
  slot_offsets_.assign(m + 2, 0);
  for (std::size_t k : unique) {
    ++ad_offsets_[edges_[k].ad + 1];
    ++slot_offsets_[edges_[k].slot + 1];
  }
  std::partial_sum(ad_offsets_.begin(), ad_offsets_.end(), ad_offsets_.begin());
  std::partial_sum(slot_offsets_.begin(), slot_offsets_.end(),
                   slot_offsets_.begin());

  // `unique` is in (ad, slot) order, so both fills come out sorted.
  ad_adjacency_.resize(unique.size());
  slot_adjacency_.resize(unique.size());
  std::vector<std::size_t> ad_fill(ad_offsets_.begin(), ad_offsets_.end());
  std::vector<std::size_t> slot_fill(slot_offsets_.begin(),
                                     slot_offsets_.end());
  for (std::size_t k : unique) {
    const Edge& e = edges_[k];
    ad_adjacency_[ad_fill[e.ad]++] = {e.slot, e.reward};
    slot_adjacency_[slot_fill[e.slot]++] = {e.ad, e.reward};
  }
}

std::span<const AdReward> ProblemInstance::ads_at(int slot) const {
  if (slot < 1 || slot > num_slots_) return {};
  return std::span<const AdReward>(slot_adjacency_)
      .subspan(slot_offsets_[slot],
               slot_offsets_[slot + 1] - slot_offsets_[slot]);
}

std::span<const SlotReward> ProblemInstance::slots_of(int ad) const {
  if (ad < 1 || ad > num_ads_) return {};
  return std::span<const SlotReward>(ad_adjacency_)
      .subspan(ad_offsets_[ad], ad_offsets_[ad + 1] - ad_offsets_[ad]);
}

std::optional<double> ProblemInstance::reward(int ad, int slot) const {
  const auto slots = slots_of(ad);
  auto it = std::lower_bound(
      slots.begin(), slots.end(), slot,
      [](const SlotReward& s, int value) { return s.slot < value; });
  if (it == slots.end() || it->slot != slot) return std::nullopt;
  return it->reward;
}

std::vector<Violation> ValidateInstance(const ProblemInstance& inst) {
  return inst.violations();
}

void RequireValid(const ProblemInstance& inst) {
  if (inst.valid()) return;
  std::ostringstream out;
  out << "invalid instance:";
  const auto& v = inst.violations();
  for (std::size_t k = 0; k < v.size() && k < 5; ++k) {
    out << " " << v[k].message << ";";
  }
  if (v.size() > 5) out << " (" << v.size() - 5 << " more)";
  throw InvalidInstanceError(out.str());
}

}  // namespace adfeed

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

#include "adfeed/oracle.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "adfeed/objective.h"

namespace adfeed {

namespace {

class MatchingEnumerator {
 public:
  explicit MatchingEnumerator(const ProblemInstance& inst)
      : inst_(inst),
        discount_(inst.quit_prob(), 2 * inst.num_slots() + 2),
        used_(inst.num_ads() + 1, 0) {}

  OracleResult Run() {
    Visit(1);
    OracleResult result;
    result.allocation = Allocation(AllocationMode::kMatching, best_);
    result.value = best_value_;
    result.evaluated = evaluated_;
    return result;
  }

 private:
  void Visit(int slot) {
    if (slot > inst_.num_slots()) {
      ++evaluated_;
      const double value = SuffixValue(scored_, 0, discount_);
      if (value > best_value_) {
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    Visit(slot + 1);
    for (const AdReward& c : inst_.ads_at(slot)) {
      if (used_[c.ad]) continue;
      used_[c.ad] = 1;
      current_.push_back({slot, c.ad});
      scored_.push_back({slot, c.reward});
      Visit(slot + 1);
      scored_.pop_back();
      current_.pop_back();
      used_[c.ad] = 0;
    }
  }

  const ProblemInstance& inst_;
  Discount discount_;
  std::vector<char> used_;
  std::vector<Assignment> current_;
  std::vector<ScoredEntry> scored_;
  std::vector<Assignment> best_;
  double best_value_ = 0.0;
  std::int64_t evaluated_ = 0;
};

struct ChunkStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations from the mean

  void Add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void Merge(const ChunkStats& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(other.count) / total;
    count += other.count;
  }
};

// Reward of one session, without building a trace.
double SessionReward(std::span<const ScoredEntry> scored, int num_slots,
                     double q, Rng& rng) {
  double reward = 0.0;
  auto it = scored.begin();
  for (int j = 1; j <= num_slots; ++j) {
    if (rng.Uniform01() < q) return reward;  // after item j
    if (it != scored.end() && it->slot == j) {
      reward += it->reward;
      ++it;
      if (rng.Uniform01() < q) return reward;  // after the ad
    }
  }
  return reward;
}

}  // namespace

OracleResult BruteForceMatching(const ProblemInstance& inst) {
  RequireValid(inst);
  if (inst.num_edges() > kBruteForceMaxEdges ||
      std::min(inst.num_ads(), inst.num_slots()) > kBruteForceMaxSide) {
    throw GuardExceededError(
        "brute-force matching needs |E| <= " +
        std::to_string(kBruteForceMaxEdges) + " and min(n, m) <= " +
        std::to_string(kBruteForceMaxSide) + "; got |E| = " +
        std::to_string(inst.num_edges()) + ", n = " +
        std::to_string(inst.num_ads()) + ", m = " +
        std::to_string(inst.num_slots()));
  }
  return MatchingEnumerator(inst).Run();
}

OracleResult BruteForceMapping(const ProblemInstance& inst) {
  RequireValid(inst);
  const int m = inst.num_slots();
  if (m > kBruteForceMaxMappingSlots) {
    throw GuardExceededError("brute-force mapping needs m <= " +
                             std::to_string(kBruteForceMaxMappingSlots) +
                             "; got m = " + std::to_string(m));
  }
  // Most rewarding ad per slot, lowest index on ties.
  std::vector<int> best_ad(m + 1, 0);
  std::vector<double> best_reward(m + 1, 0.0);
  for (int j = 1; j <= m; ++j) {
    for (const AdReward& c : inst.ads_at(j)) {
      if (best_ad[j] == 0 || c.reward > best_reward[j]) {
        best_ad[j] = c.ad;
        best_reward[j] = c.reward;
      }
    }
  }

  const Discount discount(inst.quit_prob(), 2 * m + 2);
  OracleResult result;
  result.allocation = Allocation(AllocationMode::kMapping);
  std::uint32_t best_mask = 0;
  std::vector<ScoredEntry> scored;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    scored.clear();
    bool feasible = true;
    for (int j = 1; j <= m && feasible; ++j) {
      if (!(mask & (1u << (j - 1)))) continue;
      if (best_ad[j] == 0) feasible = false;
      scored.push_back({j, best_reward[j]});
    }
    if (!feasible) continue;
    ++result.evaluated;
    const double value = SuffixValue(scored, 0, discount);
    if (value > result.value) {
      result.value = value;
      best_mask = mask;
    }
  }
  std::vector<Assignment> entries;
  for (int j = 1; j <= m; ++j) {
    if (best_mask & (1u << (j - 1))) entries.push_back({j, best_ad[j]});
  }
  result.allocation = Allocation(AllocationMode::kMapping, std::move(entries));
  return result;
}

SessionTrace SimulateSession(const ProblemInstance& inst,
                             const Allocation& alloc, Rng& rng) {
  const auto scored = ScoreEntries(inst, alloc);
  const double q = inst.quit_prob();
  SessionTrace trace;
  auto it = alloc.entries().begin();
  auto rewards = scored.begin();
  for (int j = 1; j <= inst.num_slots(); ++j) {
    trace.viewed.push_back({ViewedElement::Kind::kItem, j, 0});
    if (rng.Uniform01() < q) {
      trace.quit = true;
      return trace;
    }
    if (it != alloc.entries().end() && it->slot == j) {
      trace.viewed.push_back({ViewedElement::Kind::kAd, j, it->ad});
      trace.reward += rewards->reward;
      ++it;
      ++rewards;
      if (rng.Uniform01() < q) {
        trace.quit = true;
        return trace;
      }
    }
  }
  return trace;
}

SimulationResult SimulateSessions(const ProblemInstance& inst,
                                  const Allocation& alloc,
                                  std::int64_t sessions, std::uint64_t seed,
                                  int workers) {
  if (sessions < 1) throw std::invalid_argument("sessions must be >= 1");
  const auto scored = ScoreEntries(inst, alloc);
  const double q = inst.quit_prob();
  const int m = inst.num_slots();
  const std::int64_t num_chunks =
      (sessions + kSessionsPerChunk - 1) / kSessionsPerChunk;
  std::vector<ChunkStats> chunks(num_chunks);

  std::atomic<std::int64_t> next{0};
  auto work = [&] {
    for (std::int64_t c = next++; c < num_chunks; c = next++) {
      Rng rng(DeriveSeed(seed, static_cast<std::uint64_t>(c)));
      const std::int64_t begin = c * kSessionsPerChunk;
      const std::int64_t end = std::min(sessions, begin + kSessionsPerChunk);
      ChunkStats stats;
      for (std::int64_t s = begin; s < end; ++s) {
        stats.Add(SessionReward(scored, m, q, rng));
      }
      chunks[c] = stats;
    }
  };
  workers = std::max(1, std::min<int>(workers, static_cast<int>(num_chunks)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ChunkStats total;
  for (const ChunkStats& c : chunks) total.Merge(c);
  SimulationResult result;
  result.sessions = total.count;
  result.mean = total.mean;
  if (total.count > 1) {
    const double variance = total.m2 / static_cast<double>(total.count - 1);
    result.standard_error =
        std::sqrt(std::max(variance, 0.0) / static_cast<double>(total.count));
  }
  return result;
}

}  // namespace adfeed

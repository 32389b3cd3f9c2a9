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

// Problem data for ad allocation in a content feed with decaying attention.
//
// A feed has num_slots organic items; slot j sits right after item j (slots
// and ads are 1-based). Ad i may be shown at slot j only if the edge (i, j)
// exists, in which case it earns reward r_ij when viewed. After each viewed
// element (item or ad) the user quits with probability quit_prob.

#ifndef ADFEED_INSTANCE_H_
#define ADFEED_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace adfeed {

struct Edge {
  int ad = 0;
  int slot = 0;
  double reward = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Adjacency entries. Slot-side lists are sorted by ad, ad-side lists by slot.
struct AdReward {
  int ad;
  double reward;
};
struct SlotReward {
  int slot;
  double reward;
};

struct Violation {
  // Index into ProblemInstance::edges(), when the violation concerns an edge.
  std::optional<std::size_t> edge_index;
  std::string message;
};

class InvalidInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable after construction. Construction never throws on bad data: the
// violations are recorded and reported by ValidateInstance(). Edges that are
// out of range are kept in edges() but left out of the adjacency index.
class ProblemInstance {
 public:
  ProblemInstance() = default;
  ProblemInstance(int num_ads, int num_slots, double quit_prob,
                  std::vector<Edge> edges);

  int num_ads() const { return num_ads_; }
  int num_slots() const { return num_slots_; }
  double quit_prob() const { return quit_prob_; }
  double survival() const { return 1.0 - quit_prob_; }

  std::span<const Edge> edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  // A_j: the ads that may be placed at `slot`, ascending by ad.
  std::span<const AdReward> ads_at(int slot) const;
  // S_i: the slots ad `ad` may be placed at, ascending by slot.
  std::span<const SlotReward> slots_of(int ad) const;

  std::optional<double> reward(int ad, int slot) const;

  bool valid() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  int num_ads_ = 0;
  int num_slots_ = 0;
  double quit_prob_ = 0.0;
  std::vector<Edge> edges_;

  // CSR adjacency.
  std::vector<std::size_t> slot_offsets_;
  std::vector<AdReward> slot_adjacency_;
  std::vector<std::size_t> ad_offsets_;
  std::vector<SlotReward> ad_adjacency_;

  std::vector<Violation> violations_;
};

// Every invariant violation of `inst`; empty iff the instance is well formed.
std::vector<Violation> ValidateInstance(const ProblemInstance& inst);

// Throws InvalidInstanceError listing the first few violations.
void RequireValid(const ProblemInstance& inst);

}  // namespace adfeed

#endif  // ADFEED_INSTANCE_H_

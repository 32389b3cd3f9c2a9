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

// Expected reward of an allocation.
//
// An ad at slot j is viewed iff the user survives the j items before it and
// the B(j) ads placed at earlier slots, so
//
//   f(M)   = sum_{(i,j) in M} r_ij (1-q)^(j + B(j))
//   f_j(M) = sum_{(i,j') in M, j' > j} r_ij' (1-q)^(j' - j + B_j(j'))
//
// where B_j(j') counts occupied slots strictly between j and j'. f_0 = f and
// f_m = 0. Writing R_j = f_j(M), the suffix values obey
//
//   R_j = (1-q) (R_{j+1} + [slot j+1 occupied] (r_{j+1} - q R_{j+1}))
//
// which unrolls into a discounted sum of per-slot terms
// tau_j' = r_j' - q R_j' (see Decompose()).

#ifndef ADFEED_OBJECTIVE_H_
#define ADFEED_OBJECTIVE_H_

#include <span>
#include <vector>

#include "adfeed/allocation.h"
#include "adfeed/instance.h"

namespace adfeed {

// Powers of the survival probability (1-q)^k. Values in the cached range are
// exactly std::pow(1-q, k), so cached and uncached evaluation agree bitwise.
class Discount {
 public:
  explicit Discount(double quit_prob, int cache_up_to = 0);

  double survival() const { return survival_; }
  double operator()(int exponent) const;

 private:
  double survival_;
  std::vector<double> powers_;
};

// An allocation entry with its reward resolved.
struct ScoredEntry {
  int slot;
  double reward;
};

// f_from(M) for entries sorted by ascending slot.
double SuffixValue(std::span<const ScoredEntry> sorted_entries, int from_slot,
                   const Discount& discount);

// R_0..R_m computed by the backward recursion; result has num_slots + 1
// values.
std::vector<double> SuffixValues(std::span<const ScoredEntry> sorted_entries,
                                 int num_slots, double quit_prob);

// Resolves rewards. Throws InvalidAllocationError if `alloc` is not valid for
// `inst`.
std::vector<ScoredEntry> ScoreEntries(const ProblemInstance& inst,
                                      const Allocation& alloc);

double ExpectedReward(const ProblemInstance& inst, const Allocation& alloc);

// f_j(M). Throws std::out_of_range unless 0 <= j <= num_slots.
double SuffixReward(const ProblemInstance& inst, const Allocation& alloc,
                    int j);

struct DecompositionTerm {
  int slot = 0;
  bool occupied = false;
  // r_{e_slot} - q R_slot, zero for an empty slot.
  double tau = 0.0;
  // (1-q)^(slot - j) relative to the queried j.
  double discount = 1.0;

  double contribution() const { return occupied ? discount * tau : 0.0; }
};

// One term per slot j+1..m; the contributions sum to f_j(M). Each R_slot is
// evaluated directly from the definition, not from the recursion. Throws
// std::out_of_range unless 0 <= j <= num_slots.
std::vector<DecompositionTerm> Decompose(const ProblemInstance& inst,
                                         const Allocation& alloc, int j);

}  // namespace adfeed

#endif  // ADFEED_OBJECTIVE_H_

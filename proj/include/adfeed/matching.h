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

// Min-cost flow by successive shortest paths, and the bipartite matching
// problems reduced to it.
//
// Costs are real. Node potentials keep reduced costs non-negative so each
// shortest path is found with Dijkstra; initial potentials come from a
// Bellman-Ford pass, which also rejects networks with a negative cycle.
// Among equal-distance labels the lower node index is settled first.

#ifndef ADFEED_MATCHING_H_
#define ADFEED_MATCHING_H_

#include <span>
#include <utility>
#include <vector>

#include "adfeed/solve_report.h"

namespace adfeed {

struct FlowArc {
  int from;
  int to;
  int capacity;
  double cost;
};

class FlowNetwork {
 public:
  // Throws std::invalid_argument if source == sink or either is out of range.
  FlowNetwork(int num_nodes, int source, int sink);

  // Throws std::invalid_argument on a self loop, a bad endpoint or a negative
  // capacity. Returns the arc index.
  int AddArc(int from, int to, int capacity, double cost);

  int num_nodes() const { return num_nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  std::span<const FlowArc> arcs() const { return arcs_; }

 private:
  int num_nodes_;
  int source_;
  int sink_;
  std::vector<FlowArc> arcs_;
};

struct FlowResult {
  std::vector<int> arc_flow;
  int flow_value = 0;
  double total_cost = 0.0;
  // False when the network cannot carry the requested demand; the result
  // then holds a min-cost maximum flow.
  bool demand_met = true;
  // Cost per unit of each augmenting path, in order (non-decreasing).
  std::vector<double> path_costs;
};

// Throws std::invalid_argument if the network contains a negative cycle.
FlowResult MinCostFlow(const FlowNetwork& net, int demand,
                       const Deadline& deadline = {});

// Edge of a bipartite graph between ads (left, 1..num_left) and slots
// (right, 1..num_right).
struct WeightedPair {
  int left;
  int right;
  double weight;
};

struct MatchingResult {
  // (left, right) pairs, sorted by right.
  std::vector<std::pair<int, int>> pairs;
  double total_weight = 0.0;
  // Weight gained by each augmentation, in order (non-increasing).
  std::vector<double> augmentation_gains;
};

// Maximum-weight matching. Weights must be finite and non-negative; pairs
// of zero weight are never matched.
MatchingResult MaxWeightMatching(int num_left, int num_right,
                                 std::span<const WeightedPair> pairs,
                                 const Deadline& deadline = {});

// Maximum-weight matching among matchings with at most max_cardinality pairs.
// Each augmentation grows the matching by one pair; the search stops after
// max_cardinality augmentations or once no augmenting path gains weight.
MatchingResult ConstrainedMaxWeightMatching(int num_left, int num_right,
                                            std::span<const WeightedPair> pairs,
                                            int max_cardinality,
                                            const Deadline& deadline = {});

}  // namespace adfeed

#endif  // ADFEED_MATCHING_H_

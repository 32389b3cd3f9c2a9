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

#include "adfeed/matching.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>

namespace adfeed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kReducedCostTolerance = 1e-12;

struct ResidualArc {
  int to;
  int rev;  // index of the paired arc in adjacency_[to]
  int residual;
  double cost;
  int original;  // index into the network arcs, -1 for reverse arcs
};

struct Augmentation {
  int amount;
  double unit_cost;
};

class SuccessiveShortestPaths {
 public:
  explicit SuccessiveShortestPaths(const FlowNetwork& net)
      : source_(net.source()),
        sink_(net.sink()),
        adjacency_(net.num_nodes()),
        potential_(net.num_nodes(), 0.0),
        arc_location_(net.arcs().size()) {
    for (std::size_t k = 0; k < net.arcs().size(); ++k) {
      const FlowArc& a = net.arcs()[k];
      const int fwd = static_cast<int>(adjacency_[a.from].size());
      const int bwd = static_cast<int>(adjacency_[a.to].size());
      adjacency_[a.from].push_back(
          {a.to, bwd, a.capacity, a.cost, static_cast<int>(k)});
      adjacency_[a.to].push_back({a.from, fwd, 0, -a.cost, -1});
      arc_location_[k] = {a.from, fwd};
    }
    InitPotentials();
  }

  // Pushes up to `limit` units along one cheapest source-sink path. Returns
  // nullopt when the sink is unreachable. If `accept` rejects the path cost
  // nothing is pushed and the result has amount 0.
  std::optional<Augmentation> Augment(
      int limit, const std::function<bool(double)>& accept) {
    const int n = static_cast<int>(adjacency_.size());
    std::vector<double> dist(n, kInf);
    std::vector<int> parent_node(n, -1);
    std::vector<int> parent_arc(n, -1);
    std::vector<char> done(n, 0);
    using Label = std::pair<double, int>;
    std::priority_queue<Label, std::vector<Label>, std::greater<>> heap;
    dist[source_] = 0.0;
    heap.push({0.0, source_});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (int k = 0; k < static_cast<int>(adjacency_[u].size()); ++k) {
        const ResidualArc& arc = adjacency_[u][k];
        if (arc.residual <= 0 || done[arc.to]) continue;
        double reduced = arc.cost + potential_[u] - potential_[arc.to];
        assert(reduced >= -kReducedCostTolerance * Scale());
        reduced = std::max(reduced, 0.0);
        const double candidate = d + reduced;
        if (candidate < dist[arc.to]) {
          dist[arc.to] = candidate;
          parent_node[arc.to] = u;
          parent_arc[arc.to] = k;
          heap.push({candidate, arc.to});
        }
      }
    }
    if (!done[sink_]) return std::nullopt;
    for (int v = 0; v < n; ++v) {
      if (done[v]) potential_[v] += dist[v];
    }

    int amount = limit;
    double unit_cost = 0.0;
    for (int v = sink_; v != source_; v = parent_node[v]) {
      const ResidualArc& arc = adjacency_[parent_node[v]][parent_arc[v]];
      amount = std::min(amount, arc.residual);
      unit_cost += arc.cost;
    }
    if (!accept(unit_cost)) return Augmentation{0, unit_cost};
    for (int v = sink_; v != source_; v = parent_node[v]) {
      ResidualArc& arc = adjacency_[parent_node[v]][parent_arc[v]];
      arc.residual -= amount;
      adjacency_[v][arc.rev].residual += amount;
    }
    return Augmentation{amount, unit_cost};
  }

  std::vector<int> ArcFlows(const FlowNetwork& net) const {
    std::vector<int> flow(net.arcs().size(), 0);
    for (std::size_t k = 0; k < net.arcs().size(); ++k) {
      const auto [node, idx] = arc_location_[k];
      flow[k] = net.arcs()[k].capacity - adjacency_[node][idx].residual;
    }
    return flow;
  }

 private:
  // Bellman-Ford from a virtual root joined to every node with cost 0. Any
  // residual arc is then non-negative in reduced cost.
  void InitPotentials() {
    const int n = static_cast<int>(adjacency_.size());
    for (int pass = 0; pass <= n; ++pass) {
      bool changed = false;
      for (int u = 0; u < n; ++u) {
        for (const ResidualArc& arc : adjacency_[u]) {
          if (arc.residual <= 0) continue;
          const double candidate = potential_[u] + arc.cost;
          if (candidate < potential_[arc.to] - kReducedCostTolerance * Scale()) {
            potential_[arc.to] = candidate;
            changed = true;
          }
        }
      }
      if (!changed) return;
    }
    throw std::invalid_argument("flow network contains a negative-cost cycle");
  }

  double Scale() const {
    if (scale_ < 0) {
      double s = 1.0;
      for (const auto& arcs : adjacency_) {
        for (const ResidualArc& arc : arcs) s = std::max(s, std::abs(arc.cost));
      }
      scale_ = s * static_cast<double>(adjacency_.size());
    }
    return scale_;
  }

  int source_;
  int sink_;
  std::vector<std::vector<ResidualArc>> adjacency_;
  std::vector<double> potential_;
  std::vector<std::pair<int, int>> arc_location_;
  mutable double scale_ = -1.0;
};

MatchingResult SolveMatching(int num_left, int num_right,
                             std::span<const WeightedPair> pairs,
                             int max_cardinality, const Deadline& deadline) {
  MatchingResult result;
  if (max_cardinality <= 0) return result;

  double max_weight = 0.0;
  for (const WeightedPair& p : pairs) {
    if (p.left < 1 || p.left > num_left || p.right < 1 ||
        p.right > num_right) {
      throw std::invalid_argument("matching pair out of range");
    }
    if (!std::isfinite(p.weight) || p.weight < 0.0) {
      throw std::invalid_argument("matching weights must be finite and >= 0");
    }
    max_weight = std::max(max_weight, p.weight);
  }

  // Nodes: source 0, left 1..L, right L+1..L+R, sink L+R+1.
  const int source = 0;
  const int sink = num_left + num_right + 1;
  FlowNetwork net(num_left + num_right + 2, source, sink);
  for (int i = 1; i <= num_left; ++i) net.AddArc(source, i, 1, 0.0);
  std::vector<int> pair_arcs;
  std::vector<std::size_t> pair_index;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const WeightedPair& p = pairs[k];
    if (p.weight <= 0.0) continue;
    pair_arcs.push_back(
        net.AddArc(p.left, num_left + p.right, 1, -p.weight));
    pair_index.push_back(k);
  }
  for (int j = 1; j <= num_right; ++j) {
    net.AddArc(num_left + j, sink, 1, 0.0);
  }

  SuccessiveShortestPaths ssp(net);
  const double tolerance = 1e-12 * std::max(1.0, max_weight);
  const auto profitable = [&](double cost) { return cost < -tolerance; };
  for (int round = 0; round < max_cardinality; ++round) {
    deadline.Check();
    auto step = ssp.Augment(1, profitable);
    if (!step || step->amount == 0) break;
    result.augmentation_gains.push_back(-step->unit_cost);
  }

  const auto flow = ssp.ArcFlows(net);
  for (std::size_t k = 0; k < pair_arcs.size(); ++k) {
    if (flow[pair_arcs[k]] > 0) {
      const WeightedPair& p = pairs[pair_index[k]];
      result.pairs.emplace_back(p.left, p.right);
      result.total_weight += p.weight;
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return result;
}

}  // namespace

FlowNetwork::FlowNetwork(int num_nodes, int source, int sink)
    : num_nodes_(num_nodes), source_(source), sink_(sink) {
  if (source < 0 || source >= num_nodes || sink < 0 || sink >= num_nodes) {
    throw std::invalid_argument("source or sink out of range");
  }
  if (source == sink) throw std::invalid_argument("source equals sink");
}

int FlowNetwork::AddArc(int from, int to, int capacity, double cost) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) {
    throw std::invalid_argument("arc endpoint out of range");
  }
  if (from == to) throw std::invalid_argument("self-loop arc");
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  if (!std::isfinite(cost)) throw std::invalid_argument("non-finite arc cost");
  arcs_.push_back({from, to, capacity, cost});
  return static_cast<int>(arcs_.size()) - 1;
}

FlowResult MinCostFlow(const FlowNetwork& net, int demand,
                       const Deadline& deadline) {
  SuccessiveShortestPaths ssp(net);
  FlowResult result;
  const auto always = [](double) { return true; };
  while (result.flow_value < demand) {
    deadline.Check();
    auto step = ssp.Augment(demand - result.flow_value, always);
    if (!step) break;
    result.flow_value += step->amount;
    result.total_cost += step->amount * step->unit_cost;
    result.path_costs.push_back(step->unit_cost);
  }
  result.demand_met = result.flow_value >= demand;
  result.arc_flow = ssp.ArcFlows(net);
  // Recompute from arc flows so the reported cost carries no path-sum drift.
  result.total_cost = 0.0;
  for (std::size_t k = 0; k < net.arcs().size(); ++k) {
    result.total_cost += result.arc_flow[k] * net.arcs()[k].cost;
  }
  return result;
}

MatchingResult MaxWeightMatching(int num_left, int num_right,
                                 std::span<const WeightedPair> pairs,
                                 const Deadline& deadline) {
  return SolveMatching(num_left, num_right, pairs,
                       std::min(num_left, num_right), deadline);
}

MatchingResult ConstrainedMaxWeightMatching(int num_left, int num_right,
                                            std::span<const WeightedPair> pairs,
                                            int max_cardinality,
                                            const Deadline& deadline) {
  return SolveMatching(num_left, num_right, pairs,
                       std::min({max_cardinality, num_left, num_right}),
                       deadline);
}

}  // namespace adfeed

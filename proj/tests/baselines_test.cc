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


#include <doctest.h>

#include <cmath>
#include <limits>

#include "adfeed/baselines.h"
#include "adfeed/generators.h"
#include "adfeed/objective.h"
#include "adfeed/random.h"
#include "testing/oracles.h"

namespace adfeed {
namespace {

using testing::NaiveReward;
using testing::NearRel;

std::vector<Assignment> Entries(const Allocation& alloc) {
  return {alloc.entries().begin(), alloc.entries().end()};
}

TEST_CASE("lazy global greedy equals the naive one") {
  Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const double q = rng.Uniform(0.0, 0.6);
    const int n = static_cast<int>(rng.UniformInt(1, 15));
    const int m = static_cast<int>(rng.UniformInt(1, 40));
    // Integer rewards make ties common.
    const auto inst = testing::RandomInstance(rng, n, m, q, 0.3, trial % 2 == 0);
    const auto lazy = GlobalGreedy(inst);
    CHECK(Entries(lazy.allocation) == testing::NaiveGlobalGreedy(inst).entries);
    CHECK(lazy.algorithm == "global");
  }
}

TEST_CASE("positive marginal gains never increase") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = testing::RandomInstance(rng, 6, 15, rng.Uniform(0.0, 0.6),
                                              0.4);
    const auto trace = testing::NaiveGlobalGreedy(inst);
    for (std::size_t t = 1; t < trace.gains.size(); ++t) {
      for (std::size_t e = 0; e < inst.num_edges(); ++e) {
        const double before = trace.gains[t - 1][e];
        const double after = trace.gains[t][e];
        if (std::isnan(before) || std::isnan(after)) continue;
        if (before > 0.0) {
          CHECK(after <= before + 1e-12);
        } else {
          CHECK(after <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("forward greedy on the adversarial instance") {
  const auto inst = GenAdversarial(10, 524288.0, 0.5);
  const auto forward = ForwardGreedy(inst);
  CHECK(forward.allocation.size() == 10);
  double expected = 0.0;
  for (int j = 1; j <= 10; ++j) {
    expected += (j == 10 ? 524288.0 : 1.0) * std::pow(0.5, 2 * j - 1);
  }
  CHECK(NearRel(forward.expected_reward, expected));
  CHECK(forward.expected_reward == doctest::Approx(1.6660).epsilon(1e-3));
  CHECK(GlobalGreedy(inst).expected_reward == doctest::Approx(512.0));
  CHECK(Entries(MwmBaseline(inst).allocation) == Entries(forward.allocation));
}

TEST_CASE("online threshold") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = testing::RandomInstance(rng, 5, 12, 0.2, 0.5);
    bool positive = true;
    for (const Edge& e : inst.edges()) positive &= e.reward > 0.0;
    if (!positive) continue;
    CHECK(OnlineThreshold(inst, 0.0).allocation == ForwardGreedy(inst).allocation);
    CHECK(OnlineThreshold(inst, std::numeric_limits<double>::infinity())
              .allocation.empty());
  }
  const ProblemInstance inst(3, 2, 0.1, {{1, 1, 2.0}, {2, 1, 7.0}, {3, 2, 9.0}});
  CHECK(AutoThreshold(inst) == 7.0);
  CHECK(AutoThreshold(ProblemInstance(1, 2, 0.1, {{1, 2, 3.0}})) == 0.0);
  const auto auto_run = OnlineThreshold(inst, AutoThreshold(inst));
  CHECK(auto_run.allocation == Allocation(AllocationMode::kMatching, {{2, 3}}));
}

TEST_CASE("the auto threshold starves square symmetric instances") {
  const auto inst = GenSymmetric(100, 100, 0.1, 3);
  const auto forward = ForwardGreedy(inst);
  const auto online = OnlineThreshold(inst, AutoThreshold(inst));
  CHECK(online.allocation.size() < forward.allocation.size());
  CHECK(online.expected_reward < forward.expected_reward);
}

TEST_CASE("flow cardinality") {
  auto at = [](double q) {
    return FlowCardinality(ProblemInstance(50, 50, q, {}));
  };
  CHECK(at(0.0) == 50);
  CHECK(at(0.1) == 9);
  CHECK(at(0.05) == 19);
  CHECK(at(0.2) == 4);
  CHECK(at(0.5) == 1);
  CHECK(at(0.55) == 0);
  CHECK(at(0.9) == 0);
  CHECK(FlowCardinality(ProblemInstance(3, 50, 0.01, {})) == 3);
}

TEST_CASE("flow baseline") {
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    for (double q : {0.55, 0.6, 0.9}) {
      const auto inst = testing::RandomInstance(rng, 5, 10, q, 0.6);
      const auto flow = FlowBaseline(inst);
      CHECK(flow.allocation.empty());
      CHECK(flow.expected_reward == 0.0);
    }
    const auto inst = testing::RandomInstance(rng, 20, 30, 0.1, 0.6);
    CHECK(FlowBaseline(inst).allocation.size() <= 9);
    CHECK(FlowBaseline(inst, 3).allocation.size() <= 3);

    const auto flat = testing::RandomInstance(rng, 6, 8, 0.0, 0.6);
    CHECK(NearRel(FlowBaseline(flat).expected_reward,
                  MwmBaseline(flat).expected_reward));
  }
}

TEST_CASE("mwm is exact without decay") {
  Rng rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = testing::RandomInstance(rng, 4, 5, 0.0, 0.6, false, 14);
    CHECK(NearRel(MwmBaseline(inst).expected_reward,
                  testing::EnumerateMatchingOptimum(inst)));
  }
}

TEST_CASE("flow greedy") {
  Rng rng(46);
  for (int trial = 0; trial < 60; ++trial) {
    const double q = std::vector<double>{0.05, 0.1, 0.3, 0.6}[trial % 4];
    const auto inst = testing::RandomInstance(rng, 8, 25, q, 0.5);
    const auto flow = FlowBaseline(inst);
    const auto greedy = FlowGreedy(inst);
    CHECK(greedy.expected_reward >= flow.expected_reward - 1e-12);
    // Flow entries survive the sweep.
    for (const Assignment& a : flow.allocation.entries()) {
      CHECK(greedy.allocation.ad_at(a.slot) == a.ad);
    }
    if (q == 0.6) {
      bool positive_edge = false;
      for (const Edge& e : inst.edges()) positive_edge |= e.reward > 0.0;
      if (positive_edge) CHECK(greedy.expected_reward > 0.0);
    }
  }
  // Nothing profitable is left next to the big ad on the adversarial
  // instance.
  const auto adv = GenAdversarial(10, 524288.0, 0.5);
  CHECK(FlowGreedy(adv).allocation ==
        Allocation(AllocationMode::kMatching, {{10, 10}}));
}

TEST_CASE("greedy solvers honor max_ads") {
  const auto inst = GenSymmetric(30, 100, 0.1, 5);
  SolveOptions options;
  options.max_ads = 5;
  CHECK(GlobalGreedy(inst, options).allocation.size() == 5);
  CHECK(ForwardGreedy(inst, options).allocation.size() == 5);
  CHECK(OnlineThreshold(inst, 0.0, options).allocation.size() == 5);
  options.max_ads = 0;
  CHECK(GlobalGreedy(inst, options).allocation.empty());
}

TEST_CASE("baselines report the true objective") {
  Rng rng(47);
  const auto inst = testing::RandomInstance(rng, 6, 20, 0.2, 0.5);
  for (const SolveReport& r :
       {GlobalGreedy(inst), ForwardGreedy(inst), MwmBaseline(inst),
        FlowBaseline(inst), FlowGreedy(inst), OnlineThreshold(inst, 3.0)}) {
    CHECK(ValidateAllocation(inst, r.allocation).empty());
    CHECK(NearRel(r.expected_reward, NaiveReward(inst, r.allocation.entries())));
  }
}

}  // namespace
}  // namespace adfeed

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

#include <algorithm>
#include <cmath>

#include "adfeed/algorithms.h"
#include "adfeed/generators.h"
#include "adfeed/objective.h"
#include "adfeed/oracle.h"
#include "adfeed/random.h"
#include "testing/oracles.h"

namespace adfeed {
namespace {

using testing::NaiveReward;
using testing::NaiveSuffix;
using testing::NearRel;

// r_11 = r_22 = 1, r_12 = 1 + eps, no decay.
ProblemInstance TightnessInstance(double eps = 0.01) {
  return ProblemInstance(2, 2, 0.0,
                         {{1, 1, 1.0}, {1, 2, 1.0 + eps}, {2, 2, 1.0}});
}

TEST_CASE("tightness instance") {
  const auto inst = TightnessInstance();
  const auto gb = BackwardsGreedy(inst, AllocationMode::kMatching);
  const auto gbp = NonObliviousBackwardsGreedy(inst);
  CHECK(gb.expected_reward == doctest::Approx(1.01).epsilon(1e-12));
  CHECK(gbp.expected_reward == doctest::Approx(1.01).epsilon(1e-12));
  const Allocation ad1_at_2(AllocationMode::kMatching, {{2, 1}});
  CHECK(gb.allocation == ad1_at_2);
  CHECK(gbp.allocation == ad1_at_2);
  CHECK(gb.algorithm == "gb");
  CHECK(gbp.algorithm == "gbp");
}

TEST_CASE("adversarial instance in mapping mode") {
  const auto inst = GenAdversarial(10, 524288.0, 0.5);
  const auto gb = BackwardsGreedy(inst, AllocationMode::kMapping);
  CHECK(gb.expected_reward == doctest::Approx(512.0).epsilon(1e-12));
  CHECK(gb.allocation ==
        Allocation(AllocationMode::kMapping, {{10, 10}}));
  CHECK(gb.algorithm == "gb-mapping");
}

TEST_CASE("degenerate inputs") {
  const ProblemInstance no_edges(3, 4, 0.2, {});
  CHECK(BackwardsGreedy(no_edges, AllocationMode::kMatching).allocation.empty());
  CHECK(BackwardsGreedy(no_edges, AllocationMode::kMapping).allocation.empty());
  CHECK(NonObliviousBackwardsGreedy(no_edges).allocation.empty());

  const ProblemInstance zeros(2, 2, 0.2, {{1, 1, 0.0}, {2, 2, 0.0}});
  CHECK(NonObliviousBackwardsGreedy(zeros).allocation.empty());
  CHECK(BackwardsGreedy(zeros, AllocationMode::kMatching).allocation.empty());

  CHECK(BackwardsGreedy(ProblemInstance(0, 0, 0.0, {}),
                        AllocationMode::kMatching)
            .expected_reward == 0.0);
  CHECK_THROWS_AS(NonObliviousBackwardsGreedy(ProblemInstance(1, 1, 1.5, {})),
                  InvalidInstanceError);
}

TEST_CASE("non-oblivious greedy keeps the late slot") {
  // Slot 2 takes the ad with tau = 9; at slot 1 the score is 5 - 9 < 0.
  const ProblemInstance inst(1, 2, 0.0, {{1, 1, 5.0}, {1, 2, 9.0}});
  const auto gbp = NonObliviousBackwardsGreedy(inst);
  CHECK(gbp.allocation == Allocation(AllocationMode::kMatching, {{2, 1}}));
  CHECK(gbp.expected_reward == 9.0);
  CHECK(BruteForceMatching(inst).value == 9.0);
}

TEST_CASE("mapping mode is optimal") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const double q = std::vector<double>{0.0, 0.1, 0.3, 0.6}[trial % 4];
    const int m = static_cast<int>(rng.UniformInt(1, 6));
    const int n = static_cast<int>(rng.UniformInt(1, 3));
    const auto inst = testing::RandomInstance(rng, n, m, q, 0.6);
    const double optimum = testing::EnumerateMappingOptimum(inst);
    const auto gb = BackwardsGreedy(inst, AllocationMode::kMapping);
    CHECK(NearRel(gb.expected_reward, optimum));
  }
}

TEST_CASE("matching mode is a 2-approximation") {
  Rng rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    const double q = rng.Uniform(0.0, 0.7);
    const auto inst = testing::RandomInstance(
        rng, static_cast<int>(rng.UniformInt(1, 5)),
        static_cast<int>(rng.UniformInt(1, 6)), q, 0.6, trial % 2 == 0, 14);
    const double optimum = testing::EnumerateMatchingOptimum(inst);
    const auto gb = BackwardsGreedy(inst, AllocationMode::kMatching);
    const auto gbp = NonObliviousBackwardsGreedy(inst);
    CHECK(gb.expected_reward >= 0.5 * optimum - 1e-12);
    CHECK(gbp.expected_reward >= 0.5 * optimum - 1e-12);
    CHECK(gb.expected_reward <= optimum + 1e-9);
    CHECK(NearRel(gb.expected_reward, NaiveReward(inst, gb.allocation.entries())));
  }
}

TEST_CASE("reports are deterministic") {
  Rng rng(33);
  const auto inst = testing::RandomInstance(rng, 6, 20, 0.1, 0.5, true);
  for (int run = 0; run < 3; ++run) {
    CHECK(BackwardsGreedy(inst, AllocationMode::kMatching).allocation ==
          BackwardsGreedy(inst, AllocationMode::kMatching).allocation);
    CHECK(NonObliviousBackwardsGreedy(inst).allocation ==
          NonObliviousBackwardsGreedy(inst).allocation);
  }
}

TEST_CASE("instrumented runs") {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const double q = rng.Uniform(0.0, 0.6);
    const int m = static_cast<int>(rng.UniformInt(1, 12));
    const auto inst = testing::RandomInstance(rng, 4, m, q, 0.6);

    for (auto variant : {BackwardsVariant::kGreedyMapping,
                         BackwardsVariant::kGreedyMatching,
                         BackwardsVariant::kNonOblivious}) {
      const auto run = InstrumentedRun(variant, inst);
      REQUIRE(run.log.size() == static_cast<std::size_t>(m));
      for (std::size_t t = 0; t < run.log.size(); ++t) {
        const IterationLog& rec = run.log[t];
        CHECK(rec.slot == m - static_cast<int>(t));
        REQUIRE(rec.suffix_after.size() == static_cast<std::size_t>(m + 1));
        // Snapshots agree with the allocation they describe.
        for (int j = 0; j <= m; ++j) {
          CHECK(NearRel(rec.suffix_after[j],
                        NaiveSuffix(inst, rec.matching_after, j)));
        }
        if (variant == BackwardsVariant::kGreedyMapping) {
          CHECK_FALSE(rec.reassigned);
        }
        if (variant == BackwardsVariant::kNonOblivious && rec.committed) {
          CHECK(rec.gain > 0.0);
          CHECK(rec.gain <= rec.exact_gain + 1e-9);
        }
        if (variant != BackwardsVariant::kNonOblivious && rec.committed) {
          CHECK(NearRel(rec.gain, rec.exact_gain));
        }
      }
      // f_j never increases once slot j has been processed.
      for (std::size_t t = 0; t < run.log.size(); ++t) {
        const int j = run.log[t].slot;
        for (std::size_t u = t + 1; u < run.log.size(); ++u) {
          CHECK(run.log[u].suffix_after[j] <=
                run.log[u - 1].suffix_after[j] + 1e-12);
        }
      }
      const auto& last = run.log.empty() ? std::vector<Assignment>{}
                                         : run.log.back().matching_after;
      CHECK(std::vector<Assignment>(run.report.allocation.entries().begin(),
                                    run.report.allocation.entries().end()) ==
            last);
    }
  }
}

TEST_CASE("tau bookkeeping") {
  Rng rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const double q = rng.Uniform(0.0, 0.6);
    const auto inst = testing::RandomInstance(rng, 3, 10, q, 0.7);
    const auto run = InstrumentedRun(BackwardsVariant::kNonOblivious, inst);
    for (const IterationLog& rec : run.log) {
      std::vector<int> matched_slot(inst.num_ads() + 1, 0);
      for (const Assignment& a : rec.matching_after) matched_slot[a.ad] = a.slot;
      for (int i = 1; i <= inst.num_ads(); ++i) {
        CHECK(rec.tau_after.slot[i] == matched_slot[i]);
        if (matched_slot[i] == 0) continue;
        const int s = matched_slot[i];
        const double expected = *inst.reward(i, s) - q * rec.suffix_after[s];
        CHECK(NearRel(rec.tau_after.tau[i], expected));
      }
    }
  }
}

}  // namespace
}  // namespace adfeed

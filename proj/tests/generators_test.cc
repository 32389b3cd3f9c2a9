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
#include <set>
#include <sstream>

#include "adfeed/generators.h"
#include "adfeed/io.h"

namespace adfeed {
namespace {

std::string Text(const ProblemInstance& inst) {
  std::ostringstream out;
  WriteInstance(out, inst);
  return out.str();
}

TEST_CASE("scheme names") {
  for (Scheme s : {Scheme::kSymmetric, Scheme::kHeavyTop, Scheme::kHeavyBottom,
                   Scheme::kFinelyTargeted, Scheme::kAdversarial,
                   Scheme::kSessionYoutube, Scheme::kSessionBlocks}) {
    CHECK(ParseScheme(SchemeName(s)) == s);
  }
  CHECK_FALSE(ParseScheme("nope").has_value());
}

TEST_CASE("symmetric weighting") {
  const auto inst = GenSymmetric(100, 1000, 0.1, 1);
  CHECK(inst.valid());
  CHECK(inst.num_edges() == 100000);
  double sum = 0.0;
  for (const Edge& e : inst.edges()) {
    CHECK(e.reward >= 1.0);
    CHECK(e.reward <= 10.0);
    sum += e.reward;
  }
  const double mean = sum / static_cast<double>(inst.num_edges());
  CHECK(mean >= 5.45);
  CHECK(mean <= 5.55);
  CHECK(Text(inst) == Text(GenSymmetric(100, 1000, 0.1, 1)));
  CHECK(Text(inst) != Text(GenSymmetric(100, 1000, 0.1, 2)));

  const auto ints = GenSymmetric(20, 50, 0.1, 1, true);
  std::set<double> seen;
  for (const Edge& e : ints.edges()) {
    CHECK(e.reward == std::floor(e.reward));
    seen.insert(e.reward);
  }
  CHECK(seen.size() == 10);
  CHECK(*seen.begin() == 1.0);
  CHECK(*seen.rbegin() == 10.0);
}

TEST_CASE("asymmetric weighting") {
  const int m = 100;
  const auto top = GenAsymmetric(100, m, 0.1, 3, Direction::kTop);
  const auto bottom = GenAsymmetric(100, m, 0.1, 3, Direction::kBottom);
  CHECK(top.valid());
  CHECK(bottom.valid());
  std::vector<double> top_mean(m + 1, 0.0);
  for (const Edge& e : top.edges()) {
    const double factor = static_cast<double>(m - e.slot) / m;
    CHECK(e.reward >= 1.0 * factor - 1e-12);
    CHECK(e.reward <= 10.0 * factor + 1e-12);
    if (e.slot == m) CHECK(e.reward == 0.0);
    top_mean[e.slot] += e.reward;
  }
  for (const Edge& e : bottom.edges()) {
    if (e.slot == m) {
      CHECK(e.reward >= 1.0);
      CHECK(e.reward <= 10.0);
    }
  }
  // Column means fall with the slot index: Spearman correlation of slot
  // against column sum.
  std::vector<int> by_mean(m);
  for (int j = 0; j < m; ++j) by_mean[j] = j + 1;
  std::sort(by_mean.begin(), by_mean.end(),
            [&](int a, int b) { return top_mean[a] < top_mean[b]; });
  double d2 = 0.0;
  for (int rank = 0; rank < m; ++rank) {
    const double d = by_mean[rank] - (rank + 1);
    d2 += d * d;
  }
  const double rho = 1.0 - 6.0 * d2 / (static_cast<double>(m) * (m * m - 1));
  CHECK(rho < -0.9);
}

TEST_CASE("finely targeted weighting") {
  const int n = 10000;
  const int m = 10;
  const auto inst = GenFinelyTargeted(n, m, 0.1, 4);
  std::vector<int> per_slot(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int tens = 0;
    double row = 0.0;
    for (const SlotReward& s : inst.slots_of(i)) {
      row += s.reward;
      if (s.reward == 10.0) {
        ++tens;
        ++per_slot[s.slot];
      } else {
        CHECK(s.reward == 1.0);
      }
    }
    CHECK(tens == 1);
    CHECK(row == 10.0 + (m - 1));
  }
  // Chi-square with 9 degrees of freedom; 27.9 is the 0.999 quantile.
  double chi2 = 0.0;
  const double expected = static_cast<double>(n) / m;
  for (int j = 1; j <= m; ++j) {
    chi2 += (per_slot[j] - expected) * (per_slot[j] - expected) / expected;
  }
  CHECK(chi2 < 27.9);
}

TEST_CASE("adversarial instance") {
  const auto inst = GenAdversarial(10, 524288.0, 0.5);
  CHECK(inst.num_edges() == 10);
  for (int j = 1; j <= 10; ++j) {
    REQUIRE(inst.ads_at(j).size() == 1);
    CHECK(inst.ads_at(j)[0].ad == j);
    CHECK(inst.ads_at(j)[0].reward == (j == 10 ? 524288.0 : 1.0));
  }
  const auto two = GenAdversarial(2, 1.0, 0.1);
  CHECK(two.reward(1, 1) == 1.0);
  CHECK(two.reward(2, 2) == 1.0);
  CHECK_THROWS_AS(GenAdversarial(1, 1.0, 0.1), ConfigError);
  CHECK_THROWS_AS(GenAdversarial(3, 0.0, 0.1), ConfigError);
}

TEST_CASE("browsing permutation") {
  Rng rng(71);
  std::vector<int> categories;
  for (int v = 0; v < 200; ++v) categories.push_back(v % 5);

  for (double p : {0.0, 0.5, 1.0}) {
    auto order = BrowsingPermutation(categories, 5, p, rng);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < 200; ++v) CHECK(sorted[v] == v);

    int switches = 0;
    for (std::size_t t = 1; t < order.size(); ++t) {
      switches += categories[order[t]] != categories[order[t - 1]];
    }
    if (p == 1.0) CHECK(switches == 4);
    if (p == 0.0) CHECK(switches >= 190);
  }
  const std::vector<int> one_category(20, 0);
  CHECK(BrowsingPermutation(one_category, 1, 1.0, rng).size() == 20);
  CHECK(BrowsingPermutation({}, 3, 0.5, rng).empty());
}

TEST_CASE("youtube sessions") {
  YoutubeParams params;
  const auto inst = GenSessionYoutube(params, 300, 0.1, 5);
  CHECK(inst.valid());
  CHECK(inst.num_ads() == 120);
  CHECK(inst.num_slots() == 300);
  CHECK(inst.num_edges() == 120u * 300u);
  CHECK(Text(inst) == Text(GenSessionYoutube(params, 300, 0.1, 5)));

  // One category, equal statistics: matching rewards are 80x larger on
  // average.
  params.item_categories.assign(2000, 0);
  params.mu.assign(params.categories, 100.0);
  params.sigma.assign(params.categories, 20.0);
  const auto big = GenSessionYoutube(params, 2000, 0.1, 6);
  double match = 0.0, mismatch = 0.0;
  int match_count = 0, mismatch_count = 0;
  for (const Edge& e : big.edges()) {
    if ((e.ad - 1) % params.categories == 0) {
      match += e.reward;
      ++match_count;
    } else {
      mismatch += e.reward;
      ++mismatch_count;
    }
  }
  const double ratio = (match / match_count) / (mismatch / mismatch_count);
  CHECK(ratio == doctest::Approx(80.0).epsilon(0.02));

  params.alpha_mismatch = params.alpha_match;
  const auto flat = GenSessionYoutube(params, 2000, 0.1, 6);
  match = mismatch = 0.0;
  for (const Edge& e : flat.edges()) {
    ((e.ad - 1) % params.categories == 0 ? match : mismatch) += e.reward;
  }
  CHECK((match / match_count) / (mismatch / mismatch_count) ==
        doctest::Approx(1.0).epsilon(0.02));

  YoutubeParams bad;
  bad.same_category_prob = 1.5;
  CHECK_THROWS_AS(GenSessionYoutube(bad, 10, 0.1, 1), ConfigError);
  bad = YoutubeParams();
  bad.mu = {1.0};
  CHECK_THROWS_AS(GenSessionYoutube(bad, 10, 0.1, 1), ConfigError);
  bad = YoutubeParams();
  bad.item_categories = {0, 1};
  CHECK_THROWS_AS(GenSessionYoutube(bad, 10, 0.1, 1), ConfigError);
}

TEST_CASE("blocks sessions") {
  const auto inst = GenSessionBlocks(BlocksParams(), 1440, 0.1, 1);
  CHECK(inst.valid());
  CHECK(inst.num_ads() == 14400);
  CHECK(inst.num_slots() == 1440);
  CHECK(inst.num_edges() == 144000);

  BlocksParams params;
  params.blocks = 3;
  params.categories = 2;
  params.slots_per_block = 4;
  params.time_buckets = 2;
  params.reward_table = {{1.0, 2.0}, {3.0, 4.0}};
  const auto small = GenSessionBlocks(params, 10, 0.1, 2);
  CHECK(small.num_edges() == 3u * 2u * 4u);
  for (const Edge& e : small.edges()) {
    const int category = (e.ad - 1) % 2;
    const int bucket = (e.slot - 1) * 2 / 10;
    CHECK(e.reward == params.reward_table[category][bucket]);
  }
  // Both ads of a block share its slots.
  for (int b = 0; b < 3; ++b) {
    const auto first = small.slots_of(2 * b + 1);
    const auto second = small.slots_of(2 * b + 2);
    REQUIRE(first.size() == second.size());
    for (std::size_t t = 0; t < first.size(); ++t) {
      CHECK(first[t].slot == second[t].slot);
    }
  }
  params.reward_table = {{1.0}};
  CHECK_THROWS_AS(GenSessionBlocks(params, 10, 0.1, 2), ConfigError);
}

TEST_CASE("generator configs") {
  std::istringstream in(
      "# desk scale\n"
      "scheme = heavy_bottom\n"
      "n = 7\n"
      "m = 9   # slots\n"
      "q = 0.25\n"
      "seed = 4\n"
      "mu = 1, 2.5\n");
  const auto config = ParseGeneratorConfig(in);
  CHECK(config.scheme == Scheme::kHeavyBottom);
  CHECK(config.n == 7);
  CHECK(config.m == 9);
  CHECK(config.q == 0.25);
  CHECK(config.seed == 4);
  CHECK(config.youtube.mu == std::vector<double>{1.0, 2.5});
  const auto inst = Generate(config);
  CHECK(inst.num_ads() == 7);
  CHECK(inst.num_slots() == 9);
  CHECK(Text(inst) ==
        Text(GenAsymmetric(7, 9, 0.25, 4, Direction::kBottom)));

  GeneratorConfig adversarial;
  adversarial.scheme = Scheme::kAdversarial;
  CHECK(Generate(adversarial).num_slots() == 10);

  std::istringstream unknown("colour = blue\n");
  CHECK_THROWS_AS(ParseGeneratorConfig(unknown), ConfigError);
  std::istringstream malformed("n 5\n");
  CHECK_THROWS_AS(ParseGeneratorConfig(malformed), ConfigError);
  std::istringstream bad_value("n = five\n");
  CHECK_THROWS_AS(ParseGeneratorConfig(bad_value), ConfigError);
  GeneratorConfig negative;
  negative.n = 0;
  CHECK_THROWS_AS(Generate(negative), ConfigError);
}

}  // namespace
}  // namespace adfeed

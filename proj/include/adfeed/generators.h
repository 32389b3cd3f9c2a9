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

// Seeded instance generators. Every generator is a pure function of its
// arguments; edges are emitted in (ad, slot) order.

#ifndef ADFEED_GENERATORS_H_
#define ADFEED_GENERATORS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adfeed/instance.h"
#include "adfeed/random.h"

namespace adfeed {

enum class Scheme {
  kSymmetric,
  kHeavyTop,
  kHeavyBottom,
  kFinelyTargeted,
  kAdversarial,
  kSessionYoutube,
  kSessionBlocks,
};

const char* SchemeName(Scheme scheme);
std::optional<Scheme> ParseScheme(std::string_view name);

// Complete bipartite graph, r_ij uniform on [1, 10] (or uniform over the
// integers 1..10 with integer_rewards).
ProblemInstance GenSymmetric(int n, int m, double q, std::uint64_t seed,
                             bool integer_rewards = false);

enum class Direction { kTop, kBottom };

// Complete bipartite graph, r_ij = w (m - j) / m (top) or w j / m (bottom)
// with w uniform on [1, 10] per edge.
ProblemInstance GenAsymmetric(int n, int m, double q, std::uint64_t seed,
                              Direction direction);

// Complete bipartite graph; each ad earns 10 at one uniformly chosen slot and
// 1 everywhere else.
ProblemInstance GenFinelyTargeted(int n, int m, double q, std::uint64_t seed);

// m ads, ad j only fits slot j; r_jj = 1 for j < m and r_mm = c.
ProblemInstance GenAdversarial(int m, double c, double q);

// Browsing-session model over categorized videos.
struct YoutubeParams {
  int categories = 8;
  int advertisers = 15;
  // Chance the next video is drawn from the current video's category.
  double same_category_prob = 0.5;
  double alpha_match = 0.8;
  double alpha_mismatch = 0.01;
  // Per-category reward statistics. Empty means the synthetic defaults
  // mu_k = 500 (k + 1), sigma_k = 250 (k + 1).
  std::vector<double> mu;
  std::vector<double> sigma;
  // Category (0-based) of each video; empty means uniform at random.
  std::vector<int> item_categories;
};

// Order in which a user browses videos with the given categories: start at a
// random video; with probability p continue with an unseen video of the same
// category, otherwise with an unseen video of another category (any unseen
// video if no other category is left). Returns video indices.
std::vector<int> BrowsingPermutation(const std::vector<int>& item_categories,
                                     int num_categories, double p, Rng& rng);

// One ad per (advertiser, category), ad index a * categories + k + 1. Slot j
// shows the j-th browsed video of category k, and every ad fits every slot
// with r_ij = alpha |Normal(mu_k, sigma_k)|, alpha = alpha_match when the ad
// targets category k and alpha_mismatch otherwise.
ProblemInstance GenSessionYoutube(const YoutubeParams& params, int m, double q,
                                  std::uint64_t seed);

// Blocks of per-category ads attached to random slots.
struct BlocksParams {
  int blocks = 144;
  int categories = 100;
  int slots_per_block = 10;
  int time_buckets = 24;
  // reward_table[k][t] for category k and time bucket t. Empty means a
  // synthetic table, log-uniform on [8.4, 1500].
  std::vector<std::vector<double>> reward_table;
};

// n = blocks * categories ads. Each block picks slots_per_block distinct
// slots; every ad of the block gets an edge to each of them, rewarded with
// reward_table[category][bucket(j)], bucket(j) = (j - 1) * time_buckets / m.
ProblemInstance GenSessionBlocks(const BlocksParams& params, int m, double q,
                                 std::uint64_t seed);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorConfig {
  Scheme scheme = Scheme::kSymmetric;
  // Scheme defaults apply when unset: n = 100, m = 1000 for the weighting
  // schemes, m = 10 for adversarial, m = 14999 for session_youtube and
  // m = 1440 for session_blocks. The session schemes derive n themselves.
  std::optional<int> n;
  std::optional<int> m;
  double q = 0.1;
  std::uint64_t seed = 1;
  bool integer_rewards = false;
  double adversarial_c = 524288.0;  // 2^19
  YoutubeParams youtube;
  BlocksParams blocks;
};

// Throws ConfigError on bad parameters.
ProblemInstance Generate(const GeneratorConfig& config);

// Key-value text: one "key = value" per line, '#' starts a comment.
//
//   scheme           symmetric | heavy_top | heavy_bottom | finely_targeted |
//                    adversarial | session_youtube | session_blocks
//   n, m, q, seed    sizes, quit probability, seed
//   integer_rewards  true | false
//   c                adversarial reward of the last slot
//   categories       category count (youtube: l, blocks: k)
//   advertisers      youtube advertisers r
//   p                youtube same-category probability
//   alpha_match, alpha_mismatch
//   mu, sigma        comma-separated per-category lists
//   item_categories  comma-separated 0-based video categories
//   blocks, slots_per_block, time_buckets
//   reward_table     path of a whitespace table, one row per category
//
// Unknown keys are errors.
GeneratorConfig ParseGeneratorConfig(std::istream& in,
                                     const GeneratorConfig& base = {});
GeneratorConfig ParseGeneratorConfigFile(const std::string& path,
                                         const GeneratorConfig& base = {});
// Applies one key/value pair; used by the parser and by CLI flags.
void ApplyConfigValue(GeneratorConfig& config, std::string_view key,
                      std::string_view value);

std::vector<std::vector<double>> ReadRewardTable(const std::string& path);

}  // namespace adfeed

#endif  // ADFEED_GENERATORS_H_

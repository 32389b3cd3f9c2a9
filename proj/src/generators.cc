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

#include "adfeed/generators.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace adfeed {

namespace {

constexpr struct {
  Scheme scheme;
  const char* name;
} kSchemeNames[] = {
    {Scheme::kSymmetric, "symmetric"},
    {Scheme::kHeavyTop, "heavy_top"},
    {Scheme::kHeavyBottom, "heavy_bottom"},
    {Scheme::kFinelyTargeted, "finely_targeted"},
    {Scheme::kAdversarial, "adversarial"},
    {Scheme::kSessionYoutube, "session_youtube"},
    {Scheme::kSessionBlocks, "session_blocks"},
};

void RequirePositive(int value, const char* what) {
  if (value < 1) {
    throw ConfigError(std::string(what) + " must be positive, got " +
                      std::to_string(value));
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view text) {
  text = Trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("bad value '" + std::string(text) + "' for key '" +
                      std::string(key) + "'");
  }
  return value;
}

template <typename T>
std::vector<T> ParseList(std::string_view key, std::string_view text) {
  std::vector<T> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(ParseNumber<T>(key, text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view text) {
  text = Trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("bad boolean '" + std::string(text) + "' for key '" +
                    std::string(key) + "'");
}

}  // namespace

const char* SchemeName(Scheme scheme) {
  for (const auto& entry : kSchemeNames) {
    if (entry.scheme == scheme) return entry.name;
  }
  return "unknown";
}

std::optional<Scheme> ParseScheme(std::string_view name) {
  for (const auto& entry : kSchemeNames) {
    if (name == entry.name) return entry.scheme;
  }
  return std::nullopt;
}

ProblemInstance GenSymmetric(int n, int m, double q, std::uint64_t seed,
                             bool integer_rewards) {
  RequirePositive(n, "n");
  RequirePositive(m, "m");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const double r = integer_rewards
                           ? static_cast<double>(rng.UniformInt(1, 10))
                           : rng.Uniform(1.0, 10.0);
      edges.push_back({i, j, r});
    }
  }
  return ProblemInstance(n, m, q, std::move(edges));
}

ProblemInstance GenAsymmetric(int n, int m, double q, std::uint64_t seed,
                              Direction direction) {
  RequirePositive(n, "n");
  RequirePositive(m, "m");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const double w = rng.Uniform(1.0, 10.0);
      const int position = direction == Direction::kTop ? m - j : j;
      edges.push_back({i, j, w * position / m});
    }
  }
  return ProblemInstance(n, m, q, std::move(edges));
}

ProblemInstance GenFinelyTargeted(int n, int m, double q, std::uint64_t seed) {
  RequirePositive(n, "n");
  RequirePositive(m, "m");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 1; i <= n; ++i) {
    const int target = static_cast<int>(rng.UniformInt(1, m));
    for (int j = 1; j <= m; ++j) {
      edges.push_back({i, j, j == target ? 10.0 : 1.0});
    }
  }
  return ProblemInstance(n, m, q, std::move(edges));
}

ProblemInstance GenAdversarial(int m, double c, double q) {
  if (m < 2) throw ConfigError("adversarial instance needs m >= 2");
  if (!(c > 0.0)) throw ConfigError("adversarial reward c must be positive");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int j = 1; j <= m; ++j) edges.push_back({j, j, j == m ? c : 1.0});
  return ProblemInstance(m, m, q, std::move(edges));
}

std::vector<int> BrowsingPermutation(const std::vector<int>& item_categories,
                                     int num_categories, double p, Rng& rng) {
  const int total = static_cast<int>(item_categories.size());
  std::vector<std::vector<int>> unseen(num_categories);
  for (int v = 0; v < total; ++v) unseen[item_categories[v]].push_back(v);

  auto take = [&](int category, std::int64_t index) {
    auto& pool = unseen[category];
    const int video = pool[index];
    pool[index] = pool.back();
    pool.pop_back();
    return video;
  };
  // Uniform over unseen videos outside `category`.
  auto take_other = [&](int category, int others) {
    std::int64_t t = rng.UniformInt(0, others - 1);
    for (int k = 0; k < num_categories; ++k) {
      if (k == category) continue;
      const auto size = static_cast<std::int64_t>(unseen[k].size());
      if (t < size) return take(k, t);
      t -= size;
    }
    return -1;  // unreachable
  };

  std::vector<int> order;
  order.reserve(total);
  if (total == 0) return order;
  int current = take_other(-1, total);
  order.push_back(current);
  int remaining = total - 1;
  while (remaining > 0) {
    const int category = item_categories[current];
    const int same = static_cast<int>(unseen[category].size());
    const int others = remaining - same;
    if ((rng.Bernoulli(p) && same > 0) || others == 0) {
      current = take(category, rng.UniformInt(0, same - 1));
    } else {
      current = take_other(category, others);
    }
    order.push_back(current);
    --remaining;
  }
  return order;
}

ProblemInstance GenSessionYoutube(const YoutubeParams& params, int m, double q,
                                  std::uint64_t seed) {
  RequirePositive(m, "m");
  RequirePositive(params.categories, "categories");
  RequirePositive(params.advertisers, "advertisers");
  const int ell = params.categories;
  if (params.same_category_prob < 0.0 || params.same_category_prob > 1.0) {
    throw ConfigError("p must lie in [0, 1]");
  }
  std::vector<double> mu = params.mu;
  std::vector<double> sigma = params.sigma;
  if (mu.empty()) {
    for (int k = 0; k < ell; ++k) mu.push_back(500.0 * (k + 1));
  }
  if (sigma.empty()) {
    for (int k = 0; k < ell; ++k) sigma.push_back(250.0 * (k + 1));
  }
  if (static_cast<int>(mu.size()) != ell ||
      static_cast<int>(sigma.size()) != ell) {
    throw ConfigError("mu and sigma need one entry per category");
  }
  for (double s : sigma) {
    if (!(s >= 0.0)) throw ConfigError("sigma must be non-negative");
  }

  Rng rng(seed);
  std::vector<int> categories = params.item_categories;
  if (categories.empty()) {
    categories.resize(m);
    for (int& c : categories) c = static_cast<int>(rng.UniformInt(0, ell - 1));
  }
  if (static_cast<int>(categories.size()) != m) {
    throw ConfigError("item_categories needs exactly m entries");
  }
  for (int c : categories) {
    if (c < 0 || c >= ell) throw ConfigError("item category out of range");
  }
  const auto order =
      BrowsingPermutation(categories, ell, params.same_category_prob, rng);

  const int n = params.advertisers * ell;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * m);
  for (int a = 0; a < params.advertisers; ++a) {
    for (int ad_category = 0; ad_category < ell; ++ad_category) {
      const int ad = a * ell + ad_category + 1;
      for (int j = 1; j <= m; ++j) {
        const int k = categories[order[j - 1]];
        const double alpha = ad_category == k ? params.alpha_match
                                              : params.alpha_mismatch;
        edges.push_back({ad, j, alpha * std::abs(rng.Normal(mu[k], sigma[k]))});
      }
    }
  }
  return ProblemInstance(n, m, q, std::move(edges));
}

ProblemInstance GenSessionBlocks(const BlocksParams& params, int m, double q,
                                 std::uint64_t seed) {
  RequirePositive(m, "m");
  RequirePositive(params.blocks, "blocks");
  RequirePositive(params.categories, "categories");
  RequirePositive(params.slots_per_block, "slots_per_block");
  RequirePositive(params.time_buckets, "time_buckets");
  if (params.slots_per_block > m) {
    throw ConfigError("slots_per_block exceeds m");
  }
  Rng rng(seed);
  auto table = params.reward_table;
  if (table.empty()) {
    const double lo = std::log(8.4);
    const double hi = std::log(1500.0);
    table.assign(params.categories,
                 std::vector<double>(params.time_buckets, 0.0));
    for (auto& row : table) {
      for (double& cell : row) cell = std::exp(rng.Uniform(lo, hi));
    }
  }
  if (static_cast<int>(table.size()) != params.categories) {
    throw ConfigError("reward_table needs one row per category");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != params.time_buckets) {
      throw ConfigError("reward_table rows need time_buckets columns");
    }
  }

  const int k = params.categories;
  std::vector<int> slots(m);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(params.blocks) * k *
                params.slots_per_block);
  for (int h = 0; h < params.blocks; ++h) {
    // Partial Fisher-Yates over 1..m.
    std::iota(slots.begin(), slots.end(), 1);
    for (int t = 0; t < params.slots_per_block; ++t) {
      std::swap(slots[t], slots[rng.UniformInt(t, m - 1)]);
    }
    std::vector<int> chosen(slots.begin(),
                            slots.begin() + params.slots_per_block);
    std::sort(chosen.begin(), chosen.end());
    for (int c = 0; c < k; ++c) {
      const int ad = h * k + c + 1;
      for (int j : chosen) {
        const int bucket = static_cast<int>(
            static_cast<std::int64_t>(j - 1) * params.time_buckets / m);
        edges.push_back({ad, j, table[c][bucket]});
      }
    }
  }
  return ProblemInstance(params.blocks * k, m, q, std::move(edges));
}

ProblemInstance Generate(const GeneratorConfig& config) {
  const int n = config.n.value_or(100);
  switch (config.scheme) {
    case Scheme::kSymmetric:
      return GenSymmetric(n, config.m.value_or(1000), config.q, config.seed,
                          config.integer_rewards);
    case Scheme::kHeavyTop:
      return GenAsymmetric(n, config.m.value_or(1000), config.q, config.seed,
                           Direction::kTop);
    case Scheme::kHeavyBottom:
      return GenAsymmetric(n, config.m.value_or(1000), config.q, config.seed,
                           Direction::kBottom);
    case Scheme::kFinelyTargeted:
      return GenFinelyTargeted(n, config.m.value_or(1000), config.q,
                               config.seed);
    case Scheme::kAdversarial:
      return GenAdversarial(config.m.value_or(10), config.adversarial_c,
                            config.q);
    case Scheme::kSessionYoutube:
      return GenSessionYoutube(config.youtube, config.m.value_or(14999),
                               config.q, config.seed);
    case Scheme::kSessionBlocks:
      return GenSessionBlocks(config.blocks, config.m.value_or(1440), config.q,
                              config.seed);
  }
  throw ConfigError("unknown scheme");
}

void ApplyConfigValue(GeneratorConfig& config, std::string_view key,
                      std::string_view value) {
  value = Trim(value);
  if (key == "scheme") {
    auto scheme = ParseScheme(value);
    if (!scheme) throw ConfigError("unknown scheme '" + std::string(value) + "'");
    config.scheme = *scheme;
  } else if (key == "n") {
    config.n = ParseNumber<int>(key, value);
  } else if (key == "m") {
    config.m = ParseNumber<int>(key, value);
  } else if (key == "q") {
    config.q = ParseNumber<double>(key, value);
  } else if (key == "seed") {
    config.seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "integer_rewards") {
    config.integer_rewards = ParseBool(key, value);
  } else if (key == "c") {
    config.adversarial_c = ParseNumber<double>(key, value);
  } else if (key == "categories") {
    config.youtube.categories = ParseNumber<int>(key, value);
    config.blocks.categories = config.youtube.categories;
  } else if (key == "advertisers") {
    config.youtube.advertisers = ParseNumber<int>(key, value);
  } else if (key == "p") {
    config.youtube.same_category_prob = ParseNumber<double>(key, value);
  } else if (key == "alpha_match") {
    config.youtube.alpha_match = ParseNumber<double>(key, value);
  } else if (key == "alpha_mismatch") {
    config.youtube.alpha_mismatch = ParseNumber<double>(key, value);
  } else if (key == "mu") {
    config.youtube.mu = ParseList<double>(key, value);
  } else if (key == "sigma") {
    config.youtube.sigma = ParseList<double>(key, value);
  } else if (key == "item_categories") {
    config.youtube.item_categories = ParseList<int>(key, value);
  } else if (key == "blocks") {
    config.blocks.blocks = ParseNumber<int>(key, value);
  } else if (key == "slots_per_block") {
    config.blocks.slots_per_block = ParseNumber<int>(key, value);
  } else if (key == "time_buckets") {
    config.blocks.time_buckets = ParseNumber<int>(key, value);
  } else if (key == "reward_table") {
    config.blocks.reward_table = ReadRewardTable(std::string(value));
    config.blocks.categories =
        static_cast<int>(config.blocks.reward_table.size());
    if (!config.blocks.reward_table.empty()) {
      config.blocks.time_buckets =
          static_cast<int>(config.blocks.reward_table.front().size());
    }
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

GeneratorConfig ParseGeneratorConfig(std::istream& in,
                                     const GeneratorConfig& base) {
  GeneratorConfig config = base;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = Trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    ApplyConfigValue(config, Trim(text.substr(0, eq)), text.substr(eq + 1));
  }
  return config;
}

GeneratorConfig ParseGeneratorConfigFile(const std::string& path,
                                         const GeneratorConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  return ParseGeneratorConfig(in, base);
}

std::vector<std::vector<double>> ReadRewardTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::vector<std::vector<double>> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::vector<double> row;
    double cell;
    while (fields >> cell) row.push_back(cell);
    if (!row.empty()) table.push_back(std::move(row));
  }
  return table;
}

}  // namespace adfeed

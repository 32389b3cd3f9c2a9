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


#include "adfeed/bench.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "adfeed/algorithms.h"
#include "adfeed/baselines.h"
#include "adfeed/objective.h"
#include "adfeed/oracle.h"
#include "adfeed/postprocess.h"

namespace adfeed {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitList(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = Trim(text.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view text) {
  text = Trim(text);
  T value{};
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("bad value '" + std::string(text) + "' for key '" +
                      std::string(key) + "'");
  }
  return value;
}

// Runs body(0..count-1) on up to `jobs` threads.
void ParallelFor(std::size_t count, int jobs,
                 const std::function<void(std::size_t)>& body) {
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < count; t = next++) body(t);
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

SolveReport FromOracle(std::string name, const ProblemInstance& inst,
                       OracleResult result, Deadline::Clock::time_point start) {
  SolveCounters counters;
  counters.iterations = result.evaluated;
  return MakeReport(std::move(name), inst, std::move(result.allocation), start,
                    counters);
}

}  // namespace

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> kNames = {
      "gb",        "gbp",  "gb-mapping",  "global",     "forward",
      "threshold", "mwm",  "flow",        "flow-greedy", "bruteforce",
      "bruteforce-mapping"};
  return kNames;
}

bool IsKnownAlgorithm(std::string_view name) {
  const auto& names = AlgorithmNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SolveReport RunAlgorithm(const ProblemInstance& inst, std::string_view name,
                         const RunOptions& options) {
  RequireValid(inst);
  const auto start = Deadline::Clock::now();
  const SolveOptions& solve = options.solve;

  if (name == "global" || name == "forward" || name == "threshold") {
    SolveOptions limited = solve;
    limited.max_ads = options.k;
    if (name == "global") return GlobalGreedy(inst, limited);
    if (name == "forward") return ForwardGreedy(inst, limited);
    const double threshold =
        options.threshold ? *options.threshold : AutoThreshold(inst);
    return OnlineThreshold(inst, threshold, limited);
  }
  if (name == "flow") return FlowBaseline(inst, options.k, solve);

  SolveReport report;
  if (name == "gb") {
    report = BackwardsGreedy(inst, AllocationMode::kMatching, solve);
  } else if (name == "gb-mapping") {
    report = BackwardsGreedy(inst, AllocationMode::kMapping, solve);
  } else if (name == "gbp") {
    report = NonObliviousBackwardsGreedy(inst, solve);
  } else if (name == "mwm") {
    report = MwmBaseline(inst, solve);
  } else if (name == "flow-greedy") {
    report = FlowGreedy(inst, solve);
  } else if (name == "bruteforce") {
    report = FromOracle("bruteforce", inst, BruteForceMatching(inst), start);
  } else if (name == "bruteforce-mapping") {
    report = FromOracle("bruteforce-mapping", inst, BruteForceMapping(inst),
                        start);
  } else {
    throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                                "'");
  }
  if (options.k && static_cast<int>(report.allocation.size()) > *options.k) {
    report = MakeReport(report.algorithm, inst,
                        PruneToK(inst, report.allocation, *options.k), start,
                        report.counters);
  }
  return report;
}

std::optional<SuiteConfig> PresetSuite(std::string_view name) {
  if (name != "fig3") return std::nullopt;
  SuiteConfig suite;
  suite.dataset = "fig3";
  suite.schemes = {Scheme::kSymmetric, Scheme::kHeavyTop,
                   Scheme::kHeavyBottom, Scheme::kFinelyTargeted};
  suite.algorithms = {"gb",        "gbp", "global", "forward",
                      "threshold", "mwm", "flow",   "flow-greedy"};
  suite.seeds = {1, 2, 3};
  suite.base.n = 100;
  suite.base.m = 1000;
  suite.base.q = 0.1;
  return suite;
}

SuiteConfig ParseSuiteConfig(std::istream& in) {
  SuiteConfig suite;
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
    const std::string_view key = Trim(text.substr(0, eq));
    const std::string_view value = Trim(text.substr(eq + 1));
    if (key == "preset") {
      auto preset = PresetSuite(value);
      if (!preset) {
        throw ConfigError("unknown preset '" + std::string(value) + "'");
      }
      suite = *std::move(preset);
    } else if (key == "dataset") {
      suite.dataset = std::string(value);
    } else if (key == "schemes") {
      suite.schemes.clear();
      for (auto item : SplitList(value)) {
        auto scheme = ParseScheme(item);
        if (!scheme) {
          throw ConfigError("unknown scheme '" + std::string(item) + "'");
        }
        suite.schemes.push_back(*scheme);
      }
    } else if (key == "algorithms") {
      suite.algorithms.clear();
      for (auto item : SplitList(value)) {
        if (!IsKnownAlgorithm(item)) {
          throw ConfigError("unknown algorithm '" + std::string(item) + "'");
        }
        suite.algorithms.emplace_back(item);
      }
    } else if (key == "seeds") {
      suite.seeds.clear();
      for (auto item : SplitList(value)) {
        suite.seeds.push_back(ParseNumber<std::uint64_t>(key, item));
      }
    } else if (key == "qs") {
      suite.qs.clear();
      for (auto item : SplitList(value)) {
        suite.qs.push_back(ParseNumber<double>(key, item));
      }
    } else if (key == "ks") {
      suite.ks.clear();
      for (auto item : SplitList(value)) {
        suite.ks.push_back(ParseNumber<int>(key, item));
      }
    } else if (key == "threshold") {
      if (value == "auto") {
        suite.threshold.reset();
      } else {
        suite.threshold = ParseNumber<double>(key, value);
      }
    } else if (key == "time_limit") {
      suite.time_limit_seconds = ParseNumber<double>(key, value);
    } else {
      ApplyConfigValue(suite.base, key, value);
    }
  }
  if (suite.schemes.empty()) throw ConfigError("suite lists no schemes");
  if (suite.algorithms.empty()) throw ConfigError("suite lists no algorithms");
  if (suite.seeds.empty()) throw ConfigError("suite lists no seeds");
  return suite;
}

SuiteConfig ParseSuiteConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  return ParseSuiteConfig(in);
}

std::vector<BenchRow> RunSuite(const SuiteConfig& config, int jobs) {
  const std::vector<double> qs =
      config.qs.empty() ? std::vector<double>{config.base.q} : config.qs;
  std::vector<std::optional<int>> ks;
  for (int k : config.ks) ks.emplace_back(k);
  if (ks.empty()) ks.emplace_back(std::nullopt);

  // One instance per (scheme, q, seed).
  struct InstanceKey {
    Scheme scheme;
    double q;
    std::uint64_t seed;
  };
  std::vector<InstanceKey> keys;
  for (Scheme scheme : config.schemes) {
    for (double q : qs) {
      for (std::uint64_t seed : config.seeds) keys.push_back({scheme, q, seed});
    }
  }
  std::vector<std::optional<ProblemInstance>> instances(keys.size());
  ParallelFor(keys.size(), jobs, [&](std::size_t t) {
    GeneratorConfig gen = config.base;
    gen.scheme = keys[t].scheme;
    gen.q = keys[t].q;
    gen.seed = keys[t].seed;
    instances[t].emplace(Generate(gen));
  });

  struct Task {
    std::size_t instance;
    std::optional<int> k;
    const std::string* algorithm;
  };
  std::vector<Task> tasks;
  const std::size_t num_seeds = config.seeds.size();
  for (std::size_t block = 0; block < keys.size(); block += num_seeds) {
    for (const auto& k : ks) {
      for (const std::string& algorithm : config.algorithms) {
        for (std::size_t s = 0; s < num_seeds; ++s) {
          tasks.push_back({block + s, k, &algorithm});
        }
      }
    }
  }

  std::vector<BenchRow> rows(tasks.size());
  ParallelFor(tasks.size(), jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    const InstanceKey& key = keys[task.instance];
    const ProblemInstance& inst = *instances[task.instance];
    BenchRow& row = rows[t];
    row.dataset = config.dataset;
    row.scheme = SchemeName(key.scheme);
    row.n = inst.num_ads();
    row.m = inst.num_slots();
    row.q = key.q;
    row.k = task.k;
    row.algorithm = *task.algorithm;
    row.seed = key.seed;

    RunOptions options;
    options.k = task.k;
    options.threshold = config.threshold;
    options.solve.deadline = Deadline::After(config.time_limit_seconds);
    const auto start = Deadline::Clock::now();
    try {
      const SolveReport report = RunAlgorithm(inst, *task.algorithm, options);
      row.status = "ok";
      row.reward = ExpectedReward(inst, report.allocation);
      row.size = static_cast<int>(report.allocation.size());
      row.seconds = report.seconds;
    } catch (const TimeoutError&) {
      row.status = "timeout";
    } catch (const std::exception&) {
      row.status = "error";
    }
    if (row.status != "ok") {
      row.seconds = std::chrono::duration<double>(Deadline::Clock::now() -
                                                  start)
                        .count();
    }
  });
  return rows;
}

std::string FormatCsvReal(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "dataset,scheme,n,m,q,k,algorithm,seed,status,reward,size,seconds\n";
  for (const BenchRow& row : rows) {
    out << row.dataset << ',' << row.scheme << ',' << row.n << ',' << row.m
        << ',' << FormatCsvReal(row.q) << ','
        << (row.k ? std::to_string(*row.k) : "") << ',' << row.algorithm
        << ',' << row.seed << ',' << row.status << ','
        << (row.reward ? FormatCsvReal(*row.reward) : "") << ',' << row.size
        << ',' << FormatCsvReal(row.seconds) << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  struct Group {
    const BenchRow* first;
    int runs = 0;
    std::vector<const BenchRow*> ok;
  };
  using Key = std::tuple<std::string, std::string, int, int, double,
                         std::optional<int>, std::string>;
  std::map<Key, std::size_t> index;
  std::vector<Group> groups;
  for (const BenchRow& row : rows) {
    const Key key{row.dataset, row.scheme,   row.n,        row.m,
                  row.q,       row.k,        row.algorithm};
    auto [it, inserted] = index.emplace(key, groups.size());
    if (inserted) groups.push_back({&row, 0, {}});
    Group& group = groups[it->second];
    ++group.runs;
    if (row.status == "ok") group.ok.push_back(&row);
  }

  out << "dataset,scheme,n,m,q,k,algorithm,runs,ok,reward_mean,"
         "reward_stddev,size_mean,seconds_mean\n";
  for (const Group& group : groups) {
    const BenchRow& row = *group.first;
    out << row.dataset << ',' << row.scheme << ',' << row.n << ',' << row.m
        << ',' << FormatCsvReal(row.q) << ','
        << (row.k ? std::to_string(*row.k) : "") << ',' << row.algorithm
        << ',' << group.runs << ',' << group.ok.size() << ',';
    const double count = static_cast<double>(group.ok.size());
    if (group.ok.empty()) {
      out << ",,,\n";
      continue;
    }
    double reward = 0.0, size = 0.0, seconds = 0.0;
    for (const BenchRow* r : group.ok) {
      reward += *r->reward;
      size += r->size;
      seconds += r->seconds;
    }
    reward /= count;
    double squares = 0.0;
    for (const BenchRow* r : group.ok) {
      squares += (*r->reward - reward) * (*r->reward - reward);
    }
    const double stddev =
        group.ok.size() > 1 ? std::sqrt(squares / (count - 1.0)) : 0.0;
    out << FormatCsvReal(reward) << ',' << FormatCsvReal(stddev) << ','
        << FormatCsvReal(size / count) << ','
        << FormatCsvReal(seconds / count) << '\n';
  }
}

std::vector<double> SlotsCdf(const Allocation& alloc, int num_slots) {
  std::vector<double> cdf;
  if (alloc.empty()) return cdf;
  cdf.reserve(num_slots);
  const double total = static_cast<double>(alloc.size());
  auto it = alloc.entries().begin();
  int seen = 0;
  for (int j = 1; j <= num_slots; ++j) {
    while (it != alloc.entries().end() && it->slot <= j) {
      ++seen;
      ++it;
    }
    cdf.push_back(seen / total);
  }
  return cdf;
}

}  // namespace adfeed

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

// Solver registry and the experiment harness behind the command-line tool.

#ifndef ADFEED_BENCH_H_
#define ADFEED_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adfeed/allocation.h"
#include "adfeed/generators.h"
#include "adfeed/instance.h"
#include "adfeed/solve_report.h"

namespace adfeed {

// gb, gbp, gb-mapping, global, forward, threshold, mwm, flow, flow-greedy,
// bruteforce, bruteforce-mapping.
const std::vector<std::string>& AlgorithmNames();
bool IsKnownAlgorithm(std::string_view name);

struct RunOptions {
  // Limit on the number of ads. Greedy and online solvers stop after k
  // commits, flow uses min(k, k(q)) as its cardinality and every other
  // solver is pruned afterwards.
  std::optional<int> k;
  // Online threshold; unset means AutoThreshold().
  std::optional<double> threshold;
  SolveOptions solve;
};

// Runs solver `name`. Throws std::invalid_argument for unknown names,
// InvalidInstanceError, GuardExceededError and TimeoutError.
SolveReport RunAlgorithm(const ProblemInstance& inst, std::string_view name,
                         const RunOptions& options = {});

// CSV columns, in order:
//   dataset,scheme,n,m,q,k,algorithm,seed,status,reward,size,seconds
// k is blank without a limit; status is ok, timeout or error, and reward is
// blank unless status is ok.
struct BenchRow {
  std::string dataset;
  std::string scheme;
  int n = 0;
  int m = 0;
  double q = 0.0;
  std::optional<int> k;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string status;
  std::optional<double> reward;
  int size = 0;
  double seconds = 0.0;
};

struct SuiteConfig {
  std::string dataset = "custom";
  std::vector<Scheme> schemes;
  std::vector<std::string> algorithms;
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  // Empty means the quit probability of `base`.
  std::vector<double> qs;
  // Empty means no limit.
  std::vector<int> ks;
  // Sizes and scheme parameters shared by every instance.
  GeneratorConfig base;
  std::optional<double> threshold;
  double time_limit_seconds = 3600.0;
};

// "fig3": the four weighting schemes at n = 100, m = 1000, q = 0.1 with
// gb, gbp, global, forward, threshold, mwm, flow and flow-greedy, seeds 1-3.
std::optional<SuiteConfig> PresetSuite(std::string_view name);

// Key-value text like the generator configs, plus
//   preset      start from a preset suite
//   dataset     tag written to every row
//   schemes, algorithms, seeds, qs, ks   comma-separated lists
//   threshold   number or "auto"
//   time_limit  seconds per run
// Any other key is passed to ApplyConfigValue(). Throws ConfigError.
SuiteConfig ParseSuiteConfig(std::istream& in);
SuiteConfig ParseSuiteConfigFile(const std::string& path);

// Rows ordered by scheme, q, k, algorithm, seed, in config order. Runs may
// execute on `jobs` threads; the rows do not depend on it.
std::vector<BenchRow> RunSuite(const SuiteConfig& config, int jobs = 1);

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows);

// One row per (dataset, scheme, n, m, q, k, algorithm):
//   dataset,scheme,n,m,q,k,algorithm,runs,ok,reward_mean,reward_stddev,
//   size_mean,seconds_mean
// over the ok runs; the standard deviation is the sample one.
void WriteSummaryCsv(std::ostream& out, const std::vector<BenchRow>& rows);

// 12 significant digits.
std::string FormatCsvReal(double value);

// cdf[j - 1] = |{occupied slots <= j}| / |alloc| for j = 1..m; empty when
// the allocation is empty.
std::vector<double> SlotsCdf(const Allocation& alloc, int num_slots);

}  // namespace adfeed

#endif  // ADFEED_BENCH_H_

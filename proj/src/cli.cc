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


#include "adfeed/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "adfeed/allocation.h"
#include "adfeed/bench.h"
#include "adfeed/generators.h"
#include "adfeed/instance.h"
#include "adfeed/io.h"
#include "adfeed/objective.h"
#include "adfeed/oracle.h"
#include "adfeed/solve_report.h"

namespace adfeed {

namespace {

// Thrown for bad input files; maps to kExitInvalid.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for bad flag values found after parsing; maps to kExitUsage.
class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProblemInstance LoadInstance(const std::string& path) {
  ProblemInstance inst = [&] {
    try {
      return ReadInstanceFile(path);
    } catch (const std::exception& e) {
      throw ValidationFailure(path + ": " + e.what());
    }
  }();
  if (!inst.valid()) {
    std::ostringstream message;
    message << path << ": invalid instance";
    for (const Violation& v : inst.violations()) {
      message << "\n  " << v.message;
    }
    throw ValidationFailure(message.str());
  }
  return inst;
}

// Matching mode unless some ad appears twice.
Allocation LoadAllocation(const ProblemInstance& inst,
                          const std::string& path) {
  std::vector<Assignment> entries;
  try {
    entries = ReadAssignmentsFile(path);
  } catch (const std::exception& e) {
    throw ValidationFailure(path + ": " + e.what());
  }
  std::set<int> ads;
  bool repeats = false;
  for (const Assignment& a : entries) repeats |= !ads.insert(a.ad).second;
  try {
    Allocation alloc(
        repeats ? AllocationMode::kMapping : AllocationMode::kMatching,
        std::move(entries));
    const auto problems = ValidateAllocation(inst, alloc);
    if (!problems.empty()) {
      std::ostringstream message;
      message << path << ": invalid allocation";
      for (const auto& p : problems) message << "\n  " << p;
      throw ValidationFailure(message.str());
    }
    return alloc;
  } catch (const InvalidAllocationError& e) {
    throw ValidationFailure(path + ": " + e.what());
  }
}

std::optional<double> ParseThreshold(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageFailure("--threshold expects a number or 'auto', got '" + text +
                     "'");
}

void PrintSimulation(std::ostream& out, const ProblemInstance& inst,
                     const Allocation& alloc, std::int64_t sessions,
                     std::uint64_t seed, int jobs) {
  const SimulationResult sim =
      SimulateSessions(inst, alloc, sessions, seed, jobs);
  out << "simulated " << FormatReal(sim.mean) << " +- "
      << FormatReal(sim.standard_error) << " (" << sim.sessions
      << " sessions)\n";
}

template <typename Fn>
void WithOutput(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  fn(file);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Ad allocation in feeds with decaying attention"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  std::string gen_config, scheme, gen_out;
  std::optional<int> gen_n, gen_m;
  std::optional<double> gen_q, gen_c;
  std::optional<std::uint64_t> gen_seed;
  bool integer_rewards = false;
  gen->add_option("--config", gen_config, "Generator config file");
  gen->add_option("--scheme", scheme, "Generator scheme")
      ->check(CLI::IsMember({"symmetric", "heavy_top", "heavy_bottom",
                             "finely_targeted", "adversarial",
                             "session_youtube", "session_blocks"}));
  gen->add_option("--n", gen_n, "Number of ads");
  gen->add_option("--m", gen_m, "Number of slots");
  gen->add_option("--q", gen_q, "Quit probability");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--c", gen_c, "Adversarial reward of the last slot");
  gen->add_flag("--integer-rewards", integer_rewards,
                "Integer rewards for the symmetric scheme");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run one solver");
  std::string solve_instance, algorithm, threshold_text, solve_out;
  std::optional<int> solve_k;
  std::optional<double> time_limit;
  std::int64_t simulate = 0;
  std::uint64_t sim_seed = 1;
  int jobs = 1;
  solve->add_option("instance", solve_instance, "Instance file")->required();
  auto* algorithm_opt =
      solve->add_option("algorithm,--algorithm", algorithm, "Solver name")
          ->required();
  algorithm_opt->check(CLI::IsMember(AlgorithmNames()));
  solve->add_option("--k", solve_k, "Limit on the number of ads");
  solve->add_option("--threshold", threshold_text,
                    "Online threshold: a number or 'auto'");
  solve->add_option("--time-limit", time_limit, "Seconds");
  solve->add_option("--out", solve_out, "Write the allocation here");
  solve->add_option("--simulate", simulate, "Monte-Carlo sessions");
  solve->add_option("--seed", sim_seed, "Simulation seed");
  solve->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  // bench
  auto* bench = app.add_subcommand("bench", "Run an experiment suite");
  std::string suite_file, preset, bench_out, summary_out;
  bench->add_option("--config", suite_file, "Suite config file");
  bench->add_option("--preset", preset, "Preset suite (fig3)");
  bench->add_option("--time-limit", time_limit, "Seconds per run");
  bench->add_option("--threshold", threshold_text,
                    "Online threshold: a number or 'auto'");
  bench->add_option("--out", bench_out, "Row CSV (default stdout)");
  bench->add_option("--summary", summary_out, "Summary CSV");
  bench->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Check an allocation");
  std::string verify_instance, verify_alloc;
  verify->add_option("instance", verify_instance, "Instance file")
      ->required();
  verify->add_option("allocation", verify_alloc, "Allocation file")
      ->required();
  verify->add_option("--simulate", simulate, "Monte-Carlo sessions");
  verify->add_option("--seed", sim_seed, "Simulation seed");
  verify->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  // slots-cdf
  auto* cdf = app.add_subcommand("slots-cdf",
                                 "Cumulative distribution of used slots");
  int cdf_m = 0;
  std::vector<std::string> cdf_files;
  std::string cdf_out;
  cdf->add_option("--m", cdf_m, "Number of slots")
      ->required()
      ->check(CLI::PositiveNumber);
  cdf->add_option("allocations", cdf_files, "Allocation files")->required();
  cdf->add_option("--out", cdf_out, "Output CSV (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gen) {
      GeneratorConfig config;
      if (!gen_config.empty()) config = ParseGeneratorConfigFile(gen_config);
      if (!scheme.empty()) ApplyConfigValue(config, "scheme", scheme);
      if (gen_n) config.n = *gen_n;
      if (gen_m) config.m = *gen_m;
      if (gen_q) config.q = *gen_q;
      if (gen_seed) config.seed = *gen_seed;
      if (gen_c) config.adversarial_c = *gen_c;
      if (integer_rewards) config.integer_rewards = true;
      const ProblemInstance inst = Generate(config);
      if (!inst.valid()) {
        throw UsageFailure("generated instance is invalid: " +
                           inst.violations().front().message);
      }
      WithOutput(gen_out, out, [&](std::ostream& s) { WriteInstance(s, inst); });
      return kExitOk;
    }

    if (*solve) {
      const ProblemInstance inst = LoadInstance(solve_instance);
      RunOptions options;
      options.k = solve_k;
      options.threshold = ParseThreshold(threshold_text);
      if (time_limit) options.solve.deadline = Deadline::After(*time_limit);
      const SolveReport report = RunAlgorithm(inst, algorithm, options);
      const double reward = ExpectedReward(inst, report.allocation);
      out << "algorithm " << report.algorithm << '\n'
          << "reward " << FormatReal(reward) << '\n'
          << "size " << report.allocation.size() << '\n'
          << "seconds " << FormatCsvReal(report.seconds) << '\n';
      if (!solve_out.empty()) WriteAllocationFile(solve_out, report.allocation);
      if (simulate > 0) {
        PrintSimulation(out, inst, report.allocation, simulate, sim_seed,
                        jobs);
      }
      return kExitOk;
    }

    if (*bench) {
      SuiteConfig suite;
      if (!suite_file.empty()) {
        suite = ParseSuiteConfigFile(suite_file);
      } else {
        auto found = PresetSuite(preset.empty() ? "fig3" : preset);
        if (!found) throw UsageFailure("unknown preset '" + preset + "'");
        suite = *std::move(found);
      }
      if (time_limit) suite.time_limit_seconds = *time_limit;
      if (!threshold_text.empty()) {
        suite.threshold = ParseThreshold(threshold_text);
      }
      const auto rows = RunSuite(suite, jobs);
      WithOutput(bench_out, out,
                 [&](std::ostream& s) { WriteBenchCsv(s, rows); });
      if (!summary_out.empty()) {
        WithOutput(summary_out, out,
                   [&](std::ostream& s) { WriteSummaryCsv(s, rows); });
      }
      const bool timed_out =
          std::any_of(rows.begin(), rows.end(),
                      [](const BenchRow& r) { return r.status != "ok"; });
      return timed_out ? kExitGuard : kExitOk;
    }

    if (*verify) {
      const ProblemInstance inst = LoadInstance(verify_instance);
      const Allocation alloc = LoadAllocation(inst, verify_alloc);
      const double reward = ExpectedReward(inst, alloc);
      double residual = 0.0;
      for (int j = 0; j <= inst.num_slots(); ++j) {
        double sum = 0.0;
        for (const DecompositionTerm& t : Decompose(inst, alloc, j)) {
          sum += t.contribution();
        }
        const double direct = SuffixReward(inst, alloc, j);
        residual = std::max(residual, std::abs(sum - direct) /
                                          std::max(1.0, std::abs(direct)));
      }
      out << "mode " << ModeName(alloc.mode()) << '\n'
          << "size " << alloc.size() << '\n'
          << "reward " << FormatReal(reward) << '\n'
          << "decomposition_residual " << FormatReal(residual) << '\n';
      if (simulate > 0) {
        PrintSimulation(out, inst, alloc, simulate, sim_seed, jobs);
      }
      return kExitOk;
    }

    if (*cdf) {
      WithOutput(cdf_out, out, [&](std::ostream& s) {
        s << "allocation,slot,cdf\n";
        for (const std::string& path : cdf_files) {
          std::vector<Assignment> entries;
          try {
            entries = ReadAssignmentsFile(path);
          } catch (const std::exception& e) {
            throw ValidationFailure(path + ": " + e.what());
          }
          for (const Assignment& a : entries) {
            if (a.slot < 1 || a.slot > cdf_m) {
              throw ValidationFailure(path + ": slot " +
                                      std::to_string(a.slot) +
                                      " outside 1.." + std::to_string(cdf_m));
            }
          }
          std::set<int> ads;
          bool repeats = false;
          for (const Assignment& a : entries) {
            repeats |= !ads.insert(a.ad).second;
          }
          const Allocation alloc(
              repeats ? AllocationMode::kMapping : AllocationMode::kMatching,
              std::move(entries));
          const auto values = SlotsCdf(alloc, cdf_m);
          if (values.empty()) {
            err << "warning: " << path << " is empty\n";
            continue;
          }
          const std::string label = std::filesystem::path(path).stem();
          for (int j = 1; j <= cdf_m; ++j) {
            s << label << ',' << j << ',' << FormatCsvReal(values[j - 1])
              << '\n';
          }
        }
      });
      return kExitOk;
    }
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidAllocationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidInstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const GuardExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace adfeed

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

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "adfeed/cli.h"
#include "adfeed/io.h"

namespace adfeed {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("adfeed_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string File(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Value printed after `key ` on its own line.
std::string Field(const std::string& out, const std::string& key) {
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  }
  return "";
}

TEST_CASE("gen") {
  TempDir dir;
  const auto first = Run({"gen", "--scheme", "symmetric", "--n", "100", "--m",
                          "1000", "--q", "0.1", "--seed", "1", "--out",
                          dir.File("a.txt")});
  CHECK(first.code == kExitOk);
  const auto inst = ReadInstanceFile(dir.File("a.txt"));
  CHECK(inst.num_edges() == 100000);
  Run({"gen", "--scheme", "symmetric", "--n", "100", "--m", "1000", "--q",
       "0.1", "--seed", "1", "--out", dir.File("b.txt")});
  CHECK(ReadText(dir.File("a.txt")) == ReadText(dir.File("b.txt")));

  CHECK(Run({"gen", "--scheme", "spiral"}).code == kExitUsage);
  CHECK(Run({}).code == kExitUsage);
  CHECK(Run({"gen", "--scheme", "adversarial", "--m", "1"}).code == kExitUsage);

  WriteText(dir.File("gen.cfg"), "scheme = adversarial\nm = 4\nc = 8\n");
  const auto from_config = Run({"gen", "--config", dir.File("gen.cfg"), "--q", "0.5"});
  CHECK(from_config.code == kExitOk);
  CHECK(from_config.out.rfind("4 4 0.5\n", 0) == 0);
  CHECK(from_config.out.find("4 4 8\n") != std::string::npos);
}

TEST_CASE("solve") {
  TempDir dir;
  WriteText(dir.File("tight.txt"), "2 2 0\n1 1 1\n1 2 1.01\n2 2 1\n");
  const auto gb = Run({"solve", dir.File("tight.txt"), "gb", "--out",
                       dir.File("gb.alloc")});
  CHECK(gb.code == kExitOk);
  CHECK(std::stod(Field(gb.out, "reward")) == doctest::Approx(1.01));
  CHECK(Field(gb.out, "size") == "1");
  CHECK(ReadText(dir.File("gb.alloc")) == "2 1\n");

  const auto brute = Run({"solve", dir.File("tight.txt"), "--algorithm", "bruteforce"});
  CHECK(std::stod(Field(brute.out, "reward")) == 2.0);

  Run({"gen", "--scheme", "symmetric", "--n", "12", "--m", "12", "--q", "0.6",
       "--out", dir.File("big.txt")});
  const auto guard = Run({"solve", dir.File("big.txt"), "bruteforce"});
  CHECK(guard.code == kExitGuard);
  CHECK(guard.err.find("brute-force") != std::string::npos);

  const auto flow = Run({"solve", dir.File("big.txt"), "flow"});
  CHECK(flow.code == kExitOk);
  CHECK(Field(flow.out, "reward") == "0");
  CHECK(Field(flow.out, "size") == "0");

  const auto limited = Run({"solve", dir.File("big.txt"), "global", "--k", "2"});
  CHECK(Field(limited.out, "size") == "2");
  CHECK(Run({"solve", dir.File("big.txt"), "threshold", "--threshold", "1e9"})
            .out.find("size 0") != std::string::npos);
  CHECK(Run({"solve", dir.File("big.txt"), "threshold", "--threshold", "high"})
            .code == kExitUsage);
  CHECK(Run({"solve", dir.File("big.txt"), "magic"}).code == kExitUsage);
  CHECK(Run({"solve", dir.File("missing.txt"), "gb"}).code == kExitInvalid);

  WriteText(dir.File("bad.txt"), "1 1 1.5\n1 1 2\n");
  CHECK(Run({"solve", dir.File("bad.txt"), "gb"}).code == kExitInvalid);

  const auto simulated = Run({"solve", dir.File("tight.txt"), "gb",
                              "--simulate", "1000"});
  CHECK(simulated.out.find("simulated 1.01") != std::string::npos);
}

TEST_CASE("verify") {
  TempDir dir;
  WriteText(dir.File("inst.txt"), "1 2 0.5\n1 2 10\n");
  WriteText(dir.File("ok.alloc"), "2 1\n");
  const auto ok = Run({"verify", dir.File("inst.txt"), dir.File("ok.alloc"),
                       "--simulate", "1000000", "--seed", "7", "--jobs", "2"});
  CHECK(ok.code == kExitOk);
  CHECK(std::stod(Field(ok.out, "reward")) == 2.5);
  CHECK(std::stod(Field(ok.out, "decomposition_residual")) <= 1e-9);
  std::istringstream sim(Field(ok.out, "simulated"));
  double mean = 0.0, se = 0.0;
  std::string plus_minus;
  sim >> mean >> plus_minus >> se;
  CHECK(se > 0.0);
  CHECK(std::abs(mean - 2.5) <= 3.0 * se);

  WriteText(dir.File("missing_edge.alloc"), "1 1\n");
  CHECK(Run({"verify", dir.File("inst.txt"), dir.File("missing_edge.alloc")}).code ==
        kExitInvalid);
  WriteText(dir.File("two_per_slot.alloc"), "2 1\n2 1\n");
  CHECK(Run({"verify", dir.File("inst.txt"), dir.File("two_per_slot.alloc")}).code ==
        kExitInvalid);

  WriteText(dir.File("map.txt"), "1 2 0.5\n1 1 1\n1 2 1\n");
  WriteText(dir.File("map.alloc"), "1 1\n2 1\n");
  const auto mapping = Run({"verify", dir.File("map.txt"), dir.File("map.alloc")});
  CHECK(mapping.code == kExitOk);
  CHECK(Field(mapping.out, "mode") == "mapping");
}

TEST_CASE("slots-cdf") {
  TempDir dir;
  WriteText(dir.File("top.alloc"), "1 1\n2 2\n");
  WriteText(dir.File("empty.alloc"), "");
  const auto result = Run({"slots-cdf", "--m", "4", dir.File("top.alloc"),
                           dir.File("empty.alloc")});
  CHECK(result.code == kExitOk);
  CHECK(result.out ==
        "allocation,slot,cdf\n"
        "top,1,0.5\ntop,2,1\ntop,3,1\ntop,4,1\n");
  CHECK(result.err.find("warning") != std::string::npos);
  WriteText(dir.File("far.alloc"), "9 1\n");
  CHECK(Run({"slots-cdf", "--m", "4", dir.File("far.alloc")}).code == kExitInvalid);
}

TEST_CASE("backwards greedy reaches deeper slots on session data") {
  TempDir dir;
  Run({"gen", "--scheme", "session_youtube", "--m", "600", "--q", "0.02",
       "--seed", "3", "--out", dir.File("yt.txt")});
  CHECK(Run({"solve", dir.File("yt.txt"), "gb", "--out", dir.File("gb.alloc")}).code ==
        kExitOk);
  CHECK(Run({"solve", dir.File("yt.txt"), "forward", "--out",
             dir.File("forward.alloc")}).code == kExitOk);
  const auto cdf = Run({"slots-cdf", "--m", "600", dir.File("gb.alloc"),
                        dir.File("forward.alloc")});
  REQUIRE(cdf.code == kExitOk);
  // Forward greedy runs out of its 120 ads by slot 120.
  CHECK(cdf.out.find("forward,120,1\n") != std::string::npos);
  CHECK(cdf.out.find("gb,120,1\n") == std::string::npos);
}

TEST_CASE("bench") {
  TempDir dir;
  WriteText(dir.File("suite.cfg"),
            "dataset = tiny\nschemes = symmetric, heavy_top\n"
            "algorithms = gb, flow\nseeds = 1, 2, 3\nn = 3\nm = 6\nq = 0.2\n");
  const auto result = Run({"bench", "--config", dir.File("suite.cfg"), "--out",
                           dir.File("rows.csv"), "--summary",
                           dir.File("summary.csv"), "--jobs", "3"});
  CHECK(result.code == kExitOk);
  const auto rows = ReadText(dir.File("rows.csv"));
  CHECK(std::count(rows.begin(), rows.end(), '\n') == 1 + 12);
  const auto again = Run({"bench", "--config", dir.File("suite.cfg"), "--jobs", "1"});
  // Same rewards; only the timing column may differ.
  auto rewards = [](const std::string& csv) {
    std::istringstream lines(csv);
    std::string line, out;
    while (std::getline(lines, line)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
  };
  CHECK(rewards(again.out) == rewards(rows));
  const auto summary = ReadText(dir.File("summary.csv"));
  CHECK(std::count(summary.begin(), summary.end(), '\n') == 1 + 4);

  CHECK(Run({"bench", "--preset", "fig9"}).code == kExitUsage);
  WriteText(dir.File("broken.cfg"), "schemes = symmetric\nalgorithms = nope\n");
  CHECK(Run({"bench", "--config", dir.File("broken.cfg")}).code == kExitUsage);
}

}  // namespace
}  // namespace adfeed

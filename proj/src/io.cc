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

#include "adfeed/io.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace adfeed {

namespace {

std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k])))
      ++k;
    std::size_t start = k;
    while (k < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[k])))
      ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

bool Skippable(const std::vector<std::string_view>& fields) {
  return fields.empty() || fields.front().front() == '#';
}

template <typename T>
T ParseField(std::string_view text, int line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" +
                     std::string(text) + "'");
  }
  return value;
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

std::string FormatReal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void WriteInstance(std::ostream& out, const ProblemInstance& inst) {
  out << inst.num_ads() << ' ' << inst.num_slots() << ' '
      << FormatReal(inst.quit_prob()) << '\n';
  for (const Edge& e : inst.edges()) {
    out << e.ad << ' ' << e.slot << ' ' << FormatReal(e.reward) << '\n';
  }
}

ProblemInstance ReadInstance(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  int m = 0;
  double q = 0.0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = Fields(line);
    if (Skippable(fields)) continue;
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 3 fields");
    }
    if (!have_header) {
      n = ParseField<int>(fields[0], line_no);
      m = ParseField<int>(fields[1], line_no);
      q = ParseField<double>(fields[2], line_no);
      have_header = true;
      continue;
    }
    edges.push_back({ParseField<int>(fields[0], line_no),
                     ParseField<int>(fields[1], line_no),
                     ParseField<double>(fields[2], line_no)});
  }
  if (!have_header) throw ParseError("missing 'n m q' header line");
  return ProblemInstance(n, m, q, std::move(edges));
}

void WriteAllocation(std::ostream& out, const Allocation& alloc) {
  for (const Assignment& a : alloc.entries()) {
    out << a.slot << ' ' << a.ad << '\n';
  }
}

std::vector<Assignment> ReadAssignments(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<Assignment> out;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = Fields(line);
    if (Skippable(fields)) continue;
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'slot ad'");
    }
    out.push_back({ParseField<int>(fields[0], line_no),
                   ParseField<int>(fields[1], line_no)});
  }
  return out;
}

ProblemInstance ReadInstanceFile(const std::string& path) {
  auto in = OpenIn(path);
  return ReadInstance(in);
}

void WriteInstanceFile(const std::string& path, const ProblemInstance& inst) {
  auto out = OpenOut(path);
  WriteInstance(out, inst);
}

std::vector<Assignment> ReadAssignmentsFile(const std::string& path) {
  auto in = OpenIn(path);
  return ReadAssignments(in);
}

void WriteAllocationFile(const std::string& path, const Allocation& alloc) {
  auto out = OpenOut(path);
  WriteAllocation(out, alloc);
}

}  // namespace adfeed

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

// Line-oriented text formats.
//
// Instance:    first line "n m q", then one "i j r" line per edge.
// Allocation:  one "j i" line per entry (slot first).
//
// Fields are whitespace separated. Reals are written with 17 significant
// digits so a write/read cycle reproduces every double exactly. Blank lines
// and lines starting with '#' are ignored on input.

#ifndef ADFEED_IO_H_
#define ADFEED_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "adfeed/allocation.h"
#include "adfeed/instance.h"

namespace adfeed {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string FormatReal(double value);

void WriteInstance(std::ostream& out, const ProblemInstance& inst);
// The result may still carry violations; parsing only checks syntax.
ProblemInstance ReadInstance(std::istream& in);

void WriteAllocation(std::ostream& out, const Allocation& alloc);
std::vector<Assignment> ReadAssignments(std::istream& in);

ProblemInstance ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const std::string& path, const ProblemInstance& inst);
std::vector<Assignment> ReadAssignmentsFile(const std::string& path);
void WriteAllocationFile(const std::string& path, const Allocation& alloc);

}  // namespace adfeed

#endif  // ADFEED_IO_H_

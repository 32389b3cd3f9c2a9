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

// Seeded randomness with a platform-stable stream.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The distributions in <random> are implementation defined, so all
// conversions to reals, integers and normals are done here by hand.

#ifndef ADFEED_RANDOM_H_
#define ADFEED_RANDOM_H_

#include <cstdint>
#include <random>

namespace adfeed {

// SplitMix64 mix of (seed, stream); used to derive independent sub-seeds.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Uniform over the integers lo..hi inclusive (unbiased, by rejection).
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  bool Bernoulli(double p) { return Uniform01() < p; }
  // Box-Muller; one engine draw pair per call.
  double Normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

}  // namespace adfeed

#endif  // ADFEED_RANDOM_H_

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
#ifndef SUBKP_RANDOM_H_
#define SUBKP_RANDOM_H_

#include <cstdint>
#include <random>

namespace subkp {

// Seeded stream used everywhere randomness is drawn: std::mt19937_64, with
// doubles formed from the top 53 bits of one 64-bit draw, so
// Uniform() = (next() >> 11) * 2^-53 lies in [0, 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer over (seed, stream); gives independent per-round or
// per-trial seeds from one master seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace subkp

#endif  // SUBKP_RANDOM_H_

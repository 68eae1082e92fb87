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

#ifndef SUBKP_SETS_H_
#define SUBKP_SETS_H_

// Small-set helpers. Every set crossing the public API is a sorted vector of
// distinct non-negative ids.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subkp {

using Vertex = int;
using EdgeId = int;
using IdSet = std::vector<int>;

// Sorts and removes duplicates.
IdSet Normalize(IdSet s);
bool IsNormalized(std::span<const int> s);

bool Contains(std::span<const int> s, int x);
IdSet Union(std::span<const int> a, std::span<const int> b);
IdSet Intersection(std::span<const int> a, std::span<const int> b);
IdSet Difference(std::span<const int> a, std::span<const int> b);
bool IsSubset(std::span<const int> sub, std::span<const int> super);
bool Disjoint(std::span<const int> a, std::span<const int> b);
IdSet With(std::span<const int> s, int x);
IdSet Without(std::span<const int> s, int x);

// Bit i of the mask selects universe[i].
IdSet FromMask(std::span<const int> universe, std::uint64_t mask);

std::string ToString(std::span<const int> s);

}  // namespace subkp

#endif  // SUBKP_SETS_H_

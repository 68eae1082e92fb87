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

#include "subkp/sets.h"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace subkp {

IdSet Normalize(IdSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool IsNormalized(std::span<const int> s) {
  return std::adjacent_find(s.begin(), s.end(), [](int a, int b) {
           return a >= b;
         }) == s.end();
}

bool Contains(std::span<const int> s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

IdSet Union(std::span<const int> a, std::span<const int> b) {
  IdSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

IdSet Intersection(std::span<const int> a, std::span<const int> b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

IdSet Difference(std::span<const int> a, std::span<const int> b) {
  IdSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool IsSubset(std::span<const int> sub, std::span<const int> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool Disjoint(std::span<const int> a, std::span<const int> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

IdSet With(std::span<const int> s, int x) {
  IdSet out(s.begin(), s.end());
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it == out.end() || *it != x) out.insert(it, x);
  return out;
}

IdSet Without(std::span<const int> s, int x) {
  IdSet out(s.begin(), s.end());
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it != out.end() && *it == x) out.erase(it);
  return out;
}

IdSet FromMask(std::span<const int> universe, std::uint64_t mask) {
  IdSet out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1u) out.push_back(universe[i]);
  }
  return out;
}

std::string ToString(std::span<const int> s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

}  // namespace subkp

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
#ifndef SUBKP_REPORT_H_
#define SUBKP_REPORT_H_

#include <string>
#include <vector>

namespace subkp {

// Outcome of an exhaustive property check. violations holds at most the
// first few witnesses; ok is false whenever any violation was seen.
struct CheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

}  // namespace subkp

#endif  // SUBKP_REPORT_H_

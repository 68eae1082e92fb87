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

#ifndef SUBKP_ERRORS_H_
#define SUBKP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace subkp {

// Caller supplied an argument outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An exhaustive routine was asked to work beyond its size cap.
class ScaleLimitError : public InputError {
 public:
  explicit ScaleLimitError(const std::string& what) : InputError(what) {}
};

// A guarantee that holds for every valid matroid / submodular oracle was
// observed to fail. Indicates an inconsistent oracle or a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subkp

#endif  // SUBKP_ERRORS_H_

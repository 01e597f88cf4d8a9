// Copyright 2026 The twistcube Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace twistcube {

// Invalid input: mismatched sizes, out-of-range indices, malformed specs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two objects that must agree in size do not.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Argument outside the mathematical domain of an operation (e.g. the
// generation number of a vertex with itself).
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An analysis refused to run because the instance exceeds its size limit.
// Most guards can be lifted with an explicit `force` flag.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A postcondition failed inside the library. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twistcube

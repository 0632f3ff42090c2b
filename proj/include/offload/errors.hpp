// Copyright 2026 The Offload Authors
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

#ifndef OFFLOAD_ERRORS_HPP_
#define OFFLOAD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace offload {

// Shapes or cross references do not line up (wrong matrix dimensions, a task
// listed twice in a packing, ...). Distinct from an assignment that is merely
// infeasible, which is reported as a boolean.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numeric parameter is outside its domain (non-positive rate, negative
// capacity budget, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Linear solve failed inside the phase-type computation.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent experiment or CLI configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance document.
class InputFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace offload

#endif  // OFFLOAD_ERRORS_HPP_

// Copyright 2026 The forcing-lab Authors
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

#ifndef FORCING_LAB_ERRORS_HPP_
#define FORCING_LAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace forcing_lab {

/// Invalid graph construction or an operation whose precondition on the
/// graph does not hold (order cap, loops, disconnected input, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input: graph6 strings and family specs.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured search ceiling was exceeded. Never swallowed into a result.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Search ceilings shared by the matching engine and the solvers.
struct Limits {
  long long pm_limit = 100'000;
  long long node_limit = 10'000'000;
  long long cycle_limit = 1'000'000;
};

}  // namespace forcing_lab

#endif  // FORCING_LAB_ERRORS_HPP_

// Copyright 2026 The planetrees Authors
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

#ifndef PLANETREES_ERRORS_HPP_
#define PLANETREES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace planetrees {

// Malformed textual input: tree codes, passports, command-line values.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dual passport that violates the handshake condition for trees.
class InfeasiblePassport : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request beyond the configured desk-scale bounds.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace planetrees

#endif  // PLANETREES_ERRORS_HPP_

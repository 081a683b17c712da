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

#ifndef PLANETREES_RENDER_HPP_
#define PLANETREES_RENDER_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "planetrees/rational.hpp"
#include "planetrees/tree.hpp"

namespace planetrees {

// Both renderers draw the tree rooted at its first half-edge (vertex 0 and
// its first neighbor), which for enumerated trees is the canonical rooting.

// One Graphviz `graph` block. DOT cannot pin a plane embedding, so the
// rotation is kept as the order edges are listed (children
// counterclockwise after the parent) plus a comment per vertex.
std::string render_dot(const PlaneTree& tree, std::size_t index,
                       const std::optional<ExactRational>& weight);

// Indented sketch using ASCII box characters.
std::string render_ascii(const PlaneTree& tree, std::size_t index,
                         const std::optional<ExactRational>& weight);

}  // namespace planetrees

#endif  // PLANETREES_RENDER_HPP_

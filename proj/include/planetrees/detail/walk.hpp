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

#ifndef PLANETREES_DETAIL_WALK_HPP_
#define PLANETREES_DETAIL_WALK_HPP_

#include <vector>

#include "planetrees/tree.hpp"

namespace planetrees::detail {

struct WalkFrame {
  HalfEdge next;
  std::size_t remaining;
};

// Preorder walk of `tree` rooted at tail(root) with first child head(root),
// feeding each code symbol to `emit`. Children of a non-root vertex are
// visited counterclockwise starting just after the edge to its parent.
// `emit` returns false to stop early; the walk then returns false.
template <typename Emit>
bool walk_rooted(const PlaneTree& tree, HalfEdge root,
                 std::vector<WalkFrame>& stack, Emit&& emit) {
  stack.clear();
  if (!emit('(')) return false;
  stack.push_back({root, tree.degree(tree.tail(root))});
  while (!stack.empty()) {
    WalkFrame& top = stack.back();
    if (top.remaining == 0) {
      stack.pop_back();
      if (!emit(')')) return false;
      continue;
    }
    const HalfEdge h = top.next;
    top.next = tree.next_around(h);
    --top.remaining;
    if (!emit('(')) return false;
    const Vertex child = tree.head(h);
    stack.push_back({tree.next_around(tree.twin(h)), tree.degree(child) - 1});
  }
  return true;
}

}  // namespace planetrees::detail

#endif  // PLANETREES_DETAIL_WALK_HPP_

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

#include "planetrees/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "planetrees/detail/walk.hpp"

namespace planetrees {

namespace {

std::string code_at(const PlaneTree& tree, HalfEdge h,
                    std::vector<detail::WalkFrame>& stack) {
  std::string out;
  out.reserve(2 * tree.vertex_count());
  detail::walk_rooted(tree, h, stack, [&](char c) {
    out.push_back(c);
    return true;
  });
  return out;
}

// Compares the rooting at h against `reference`, stopping at the first
// difference.
int compare_rooting(const PlaneTree& tree, HalfEdge h,
                    const std::string& reference,
                    std::vector<detail::WalkFrame>& stack) {
  std::size_t i = 0;
  int result = 0;
  detail::walk_rooted(tree, h, stack, [&](char c) {
    if (c != reference[i]) {
      result = c < reference[i] ? -1 : 1;
      return false;
    }
    ++i;
    return true;
  });
  return result;
}

}  // namespace

Code rooted_code(const PlaneTree& tree, DirectedEdge e) {
  return Code::trusted(format_tree(tree, e));
}

Code canonical_code(const PlaneTree& tree) {
  std::vector<detail::WalkFrame> stack;
  std::string best = code_at(tree, 0, stack);
  const auto halves = static_cast<HalfEdge>(tree.half_edge_count());
  for (HalfEdge h = 1; h < halves; ++h) {
    if (compare_rooting(tree, h, best, stack) < 0) best = code_at(tree, h, stack);
  }
  return Code::trusted(std::move(best));
}

std::size_t aut_order(const PlaneTree& tree) {
  const std::string best = canonical_code(tree).str();
  std::vector<detail::WalkFrame> stack;
  std::size_t hits = 0;
  const auto halves = static_cast<HalfEdge>(tree.half_edge_count());
  for (HalfEdge h = 0; h < halves; ++h) {
    if (compare_rooting(tree, h, best, stack) == 0) ++hits;
  }
  return hits;
}

ExactRational weight(const PlaneTree& tree) {
  return ExactRational(BigInt(1), BigInt(aut_order(tree)));
}

bool is_canonical_rooting(const PlaneTree& tree, HalfEdge candidate) {
  std::vector<detail::WalkFrame> stack;
  const std::string reference = code_at(tree, candidate, stack);
  const auto halves = static_cast<HalfEdge>(tree.half_edge_count());
  for (HalfEdge h = 0; h < halves; ++h) {
    if (h != candidate && compare_rooting(tree, h, reference, stack) < 0) {
      return false;
    }
  }
  return true;
}

std::vector<Vertex> graph_center(const PlaneTree& tree) {
  const auto n = tree.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = tree.degree(static_cast<Vertex>(v));
    if (deg[v] == 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex nb : tree.rotation(leaf)) {
        if (--deg[nb] == 1) next.push_back(nb);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

SymmetryCenter symmetry_center(const PlaneTree& tree) {
  const std::size_t order = aut_order(tree);
  if (order == 1) return Asymmetric{};
  const auto center = graph_center(tree);
  if (center.size() == 2) return EdgeMidpoint{center[0], center[1]};
  return VertexCenter{center[0], order};
}

}  // namespace planetrees

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

#ifndef PLANETREES_CANONICAL_HPP_
#define PLANETREES_CANONICAL_HPP_

#include <cstddef>
#include <variant>

#include "planetrees/rational.hpp"
#include "planetrees/tree.hpp"

namespace planetrees {

// Code of `tree` rooted at e.from with first child e.to. Throws
// std::invalid_argument if e is not an edge.
Code rooted_code(const PlaneTree& tree, DirectedEdge e);

// Lexicographically smallest rooted code over all 2(N-1) directed edges.
// A complete invariant: equal codes iff plane-isomorphic.
Code canonical_code(const PlaneTree& tree);

// Order of the rotation group, counted as the number of directed edges
// whose rooted code equals the canonical code. Automorphisms act freely
// on directed edges, so this is exactly #Aut.
std::size_t aut_order(const PlaneTree& tree);

// 1 / aut_order(tree).
ExactRational weight(const PlaneTree& tree);

// True iff the rooting at `candidate` yields the canonical code. Cheaper
// than canonical_code(): every other rooting is abandoned at the first
// symbol where it differs.
bool is_canonical_rooting(const PlaneTree& tree, HalfEdge candidate);

struct Asymmetric {
  friend bool operator==(const Asymmetric&, const Asymmetric&) = default;
};
// The rotation swaps the two ends of this edge; order is always 2.
struct EdgeMidpoint {
  Vertex u;
  Vertex v;
  friend bool operator==(const EdgeMidpoint&, const EdgeMidpoint&) = default;
};
// Rotation about a fixed vertex; `order` divides the vertex's degree.
struct VertexCenter {
  Vertex center;
  std::size_t order;
  friend bool operator==(const VertexCenter&, const VertexCenter&) = default;
};
using SymmetryCenter = std::variant<Asymmetric, EdgeMidpoint, VertexCenter>;

// Graph center by repeated leaf stripping: one vertex, or two adjacent
// vertices (returned with the smaller index first).
std::vector<Vertex> graph_center(const PlaneTree& tree);

SymmetryCenter symmetry_center(const PlaneTree& tree);

}  // namespace planetrees

#endif  // PLANETREES_CANONICAL_HPP_

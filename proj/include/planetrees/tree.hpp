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

#ifndef PLANETREES_TREE_HPP_
#define PLANETREES_TREE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace planetrees {

using Vertex = std::int32_t;
using HalfEdge = std::int32_t;

struct DirectedEdge {
  Vertex from;
  Vertex to;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// A tree with a counterclockwise cyclic order of neighbors at every vertex.
//
// Stored as a half-edge structure: the half-edges leaving vertex v occupy
// [offset(v), offset(v+1)) in rotation order, so "next counterclockwise"
// is a modular step within that block.
class PlaneTree {
 public:
  // Validates symmetry, connectivity, N-1 edges and N >= 2; throws
  // std::invalid_argument otherwise.
  static PlaneTree from_rotation(const std::vector<std::vector<Vertex>>& rotation);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return heads_.size() / 2; }
  std::size_t half_edge_count() const { return heads_.size(); }

  std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const Vertex> rotation(Vertex v) const {
    return {heads_.data() + offsets_[v], degree(v)};
  }

  // Half-edge navigation.
  Vertex tail(HalfEdge h) const { return tails_[h]; }
  Vertex head(HalfEdge h) const { return heads_[h]; }
  HalfEdge twin(HalfEdge h) const { return twins_[h]; }
  // The half-edge following h counterclockwise around tail(h).
  HalfEdge next_around(HalfEdge h) const {
    const Vertex v = tails_[h];
    return h + 1 == offsets_[v + 1] ? offsets_[v] : h + 1;
  }
  std::optional<HalfEdge> find(DirectedEdge e) const;
  DirectedEdge edge(HalfEdge h) const { return {tails_[h], heads_[h]}; }

  std::vector<DirectedEdge> directed_edges() const;

 private:
  PlaneTree() = default;
  friend class TreeBuilder;

  std::vector<HalfEdge> offsets_;
  std::vector<Vertex> heads_;
  std::vector<Vertex> tails_;
  std::vector<HalfEdge> twins_;
};

// Degree census (a_1, ..., a_k): a_d vertices of degree d, a_k > 0.
class DualPassport {
 public:
  // Trailing zeros are dropped; throws std::invalid_argument if nothing
  // positive remains.
  explicit DualPassport(std::vector<std::uint32_t> counts);

  std::span<const std::uint32_t> counts() const { return counts_; }
  std::size_t max_degree() const { return counts_.size(); }
  // Number of vertices of degree d (0 for d outside 1..max_degree()).
  std::uint32_t count(std::size_t degree) const {
    return degree >= 1 && degree <= counts_.size() ? counts_[degree - 1] : 0;
  }
  std::uint64_t total_vertices() const;
  std::uint64_t degree_sum() const;

  // Comma-separated decimal, e.g. "4,2,0,1".
  std::string str() const;

  friend bool operator==(const DualPassport&, const DualPassport&) = default;
  friend auto operator<=>(const DualPassport&, const DualPassport&) = default;

 private:
  std::vector<std::uint32_t> counts_;
};

// Balanced-parenthesis word of a rooted plane tree: "(" enters a vertex,
// ")" leaves it, children in order. Ordered by plain lexicographic
// comparison, which puts "(" before ")".
class Code {
 public:
  // Throws ParseError unless `word` is a well-formed code with >= 2 vertices.
  explicit Code(std::string word);

  const std::string& str() const { return word_; }
  std::size_t vertex_count() const { return word_.size() / 2; }

  friend bool operator==(const Code&, const Code&) = default;
  friend auto operator<=>(const Code&, const Code&) = default;

  // Skips validation; for words produced by this library's traversals.
  static Code trusted(std::string word) {
    Code c;
    c.word_ = std::move(word);
    return c;
  }

 private:
  Code() = default;
  std::string word_;
};

DualPassport passport_of(const PlaneTree& tree);

// Handshake condition sum(d * a_d) == 2(N - 1) with N >= 2.
bool is_feasible(const DualPassport& passport);

// Every feasible passport with 2 <= N <= max_vertices, ordered by N and
// then by counts.
std::vector<DualPassport> feasible_passports(std::size_t max_vertices);

// "4,2,0,1" -> (4,2,0,1). Nonnegative decimal fields, last one positive.
DualPassport parse_passport(std::string_view text);

// Builds the tree whose rooting at (vertex 0, vertex 1) reproduces `text`.
// Vertices are numbered in preorder; each vertex's rotation is its
// children in code order followed by its parent.
PlaneTree parse_tree(std::string_view text);
PlaneTree tree_from_code(const Code& code);

// Code word of `tree` rooted at root_edge.from with first child
// root_edge.to. Throws std::invalid_argument if the edge is absent.
std::string format_tree(const PlaneTree& tree, DirectedEdge root_edge);

}  // namespace planetrees

#endif  // PLANETREES_TREE_HPP_

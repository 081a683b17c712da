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

#include "planetrees/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "planetrees/detail/walk.hpp"
#include "planetrees/errors.hpp"

namespace planetrees {

// Fills the half-edge arrays from rotation lists. Callers guarantee that
// adjacency is symmetric and simple.
class TreeBuilder {
 public:
  static PlaneTree build(const std::vector<std::vector<Vertex>>& rotation) {
    PlaneTree t;
    const auto n = rotation.size();
    t.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      t.offsets_[v + 1] =
          t.offsets_[v] + static_cast<HalfEdge>(rotation[v].size());
    }
    const auto halves = static_cast<std::size_t>(t.offsets_[n]);
    t.heads_.resize(halves);
    t.tails_.resize(halves);
    t.twins_.resize(halves);
    for (std::size_t v = 0; v < n; ++v) {
      std::copy(rotation[v].begin(), rotation[v].end(),
                t.heads_.begin() + t.offsets_[v]);
      std::fill(t.tails_.begin() + t.offsets_[v],
                t.tails_.begin() + t.offsets_[v + 1], static_cast<Vertex>(v));
    }
    for (std::size_t h = 0; h < halves; ++h) {
      const Vertex u = t.tails_[h];
      const Vertex v = t.heads_[h];
      auto nb = t.rotation(v);
      auto it = std::find(nb.begin(), nb.end(), u);
      t.twins_[h] = t.offsets_[v] + static_cast<HalfEdge>(it - nb.begin());
    }
    return t;
  }
};

PlaneTree PlaneTree::from_rotation(
    const std::vector<std::vector<Vertex>>& rotation) {
  const auto n = rotation.size();
  if (n < 2) throw std::invalid_argument("plane tree needs at least 2 vertices");
  std::size_t halves = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : rotation[u]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || static_cast<std::size_t>(v) == u) {
        throw std::invalid_argument("rotation entry out of range or a loop");
      }
      const auto& back = rotation[v];
      if (std::count(back.begin(), back.end(), static_cast<Vertex>(u)) != 1 ||
          std::count(rotation[u].begin(), rotation[u].end(), v) != 1) {
        throw std::invalid_argument("rotation adjacency is not symmetric");
      }
    }
    halves += rotation[u].size();
  }
  if (halves != 2 * (n - 1)) {
    throw std::invalid_argument("a tree on N vertices has N-1 edges");
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> todo{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const Vertex u = todo.back();
    todo.pop_back();
    for (Vertex v : rotation[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        todo.push_back(v);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("rotation graph is disconnected");
  return TreeBuilder::build(rotation);
}

std::optional<HalfEdge> PlaneTree::find(DirectedEdge e) const {
  if (e.from < 0 || static_cast<std::size_t>(e.from) >= vertex_count()) {
    return std::nullopt;
  }
  auto nb = rotation(e.from);
  auto it = std::find(nb.begin(), nb.end(), e.to);
  if (it == nb.end()) return std::nullopt;
  return offsets_[e.from] + static_cast<HalfEdge>(it - nb.begin());
}

std::vector<DirectedEdge> PlaneTree::directed_edges() const {
  std::vector<DirectedEdge> out;
  out.reserve(half_edge_count());
  for (std::size_t h = 0; h < half_edge_count(); ++h) {
    out.push_back(edge(static_cast<HalfEdge>(h)));
  }
  return out;
}

DualPassport::DualPassport(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  if (counts_.empty()) {
    throw std::invalid_argument("dual passport needs a positive entry");
  }
}

std::uint64_t DualPassport::total_vertices() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t DualPassport::degree_sum() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) s += (i + 1) * counts_[i];
  return s;
}

std::string DualPassport::str() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

Code::Code(std::string word) : word_(std::move(word)) {
  std::ptrdiff_t depth = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const char c = word_[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) throw ParseError("code closes more vertices than it opens");
      if (depth == 0 && i + 1 != word_.size()) {
        throw ParseError("code is not a single rooted tree");
      }
    } else {
      throw ParseError("code contains a character other than '(' or ')'");
    }
  }
  if (depth != 0) throw ParseError("code leaves vertices open");
  if (word_.size() < 4) throw ParseError("code must encode at least 2 vertices");
}

DualPassport passport_of(const PlaneTree& tree) {
  std::vector<std::uint32_t> counts;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    const auto d = tree.degree(static_cast<Vertex>(v));
    if (counts.size() < d) counts.resize(d, 0);
    ++counts[d - 1];
  }
  return DualPassport(std::move(counts));
}

bool is_feasible(const DualPassport& passport) {
  const auto n = passport.total_vertices();
  return n >= 2 && passport.degree_sum() == 2 * (n - 1);
}

namespace {

// Partitions of `rest` into parts <= max_part, appended to `parts`.
// A part p stands for one vertex of degree p + 1; leaves fill the remainder.
void passports_with_excess(std::size_t n, std::size_t rest, std::size_t max_part,
                           std::vector<std::size_t>& parts,
                           std::vector<DualPassport>& out) {
  if (rest == 0) {
    std::vector<std::uint32_t> counts(parts.empty() ? 1 : parts.front() + 1, 0);
    for (auto p : parts) ++counts[p];
    counts[0] = static_cast<std::uint32_t>(n - parts.size());
    out.emplace_back(std::move(counts));
    return;
  }
  for (std::size_t p = std::min(rest, max_part); p >= 1; --p) {
    parts.push_back(p);
    passports_with_excess(n, rest - p, p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<DualPassport> feasible_passports(std::size_t max_vertices) {
  std::vector<DualPassport> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::vector<DualPassport> level;
    std::vector<std::size_t> parts;
    passports_with_excess(n, n - 2, n - 2, parts, level);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

DualPassport parse_passport(std::string_view text) {
  std::vector<std::uint32_t> counts;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto field =
        text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError("passport field '" + std::string(field) +
                       "' is not a nonnegative decimal integer");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (counts.back() == 0) {
    throw ParseError("passport must end with a positive entry");
  }
  return DualPassport(std::move(counts));
}

PlaneTree tree_from_code(const Code& code) {
  const std::string& w = code.str();
  std::vector<std::vector<Vertex>> rotation;
  rotation.reserve(code.vertex_count());
  std::vector<Vertex> path;
  for (char c : w) {
    if (c == '(') {
      const auto v = static_cast<Vertex>(rotation.size());
      rotation.emplace_back();
      if (!path.empty()) rotation[path.back()].push_back(v);
      path.push_back(v);
    } else {
      const Vertex v = path.back();
      path.pop_back();
      if (!path.empty()) rotation[v].push_back(path.back());
    }
  }
  return TreeBuilder::build(rotation);
}

PlaneTree parse_tree(std::string_view text) {
  return tree_from_code(Code(std::string(text)));
}

std::string format_tree(const PlaneTree& tree, DirectedEdge root_edge) {
  const auto h = tree.find(root_edge);
  if (!h) throw std::invalid_argument("root edge is not an edge of the tree");
  std::string out;
  out.reserve(2 * tree.vertex_count());
  std::vector<detail::WalkFrame> stack;
  detail::walk_rooted(tree, *h, stack, [&](char c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace planetrees

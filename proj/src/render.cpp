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

#include "planetrees/render.hpp"

#include <sstream>

#include "planetrees/canonical.hpp"

namespace planetrees {

namespace {

struct Visit {
  Vertex vertex;
  Vertex parent;  // -1 for the root
  std::string prefix;
  bool last;
};

// Preorder over the rooting at half-edge 0, with the drawing prefix each
// vertex needs for the ASCII sketch.
std::vector<Visit> preorder(const PlaneTree& tree) {
  std::vector<Visit> out;
  struct Item {
    HalfEdge via;  // half-edge from parent, or -1 at the root
    std::string prefix;
    bool last;
  };
  std::vector<Item> stack{{-1, "", true}};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const Vertex v = item.via < 0 ? 0 : tree.head(item.via);
    const Vertex parent = item.via < 0 ? -1 : tree.tail(item.via);
    out.push_back({v, parent, item.prefix, item.last});

    std::vector<HalfEdge> kids;
    HalfEdge h = item.via < 0 ? 0 : tree.next_around(tree.twin(item.via));
    const std::size_t count = item.via < 0 ? tree.degree(v) : tree.degree(v) - 1;
    for (std::size_t i = 0; i < count; ++i, h = tree.next_around(h)) {
      kids.push_back(h);
    }
    const std::string child_prefix =
        item.via < 0 ? "" : item.prefix + (item.last ? "    " : "|   ");
    for (std::size_t i = kids.size(); i-- > 0;) {
      stack.push_back({kids[i], child_prefix, i + 1 == kids.size()});
    }
  }
  return out;
}

}  // namespace

std::string render_dot(const PlaneTree& tree, std::size_t index,
                       const std::optional<ExactRational>& weight) {
  std::ostringstream os;
  os << "graph tree_" << index << " {\n";
  os << "  // code " << format_tree(tree, tree.edge(0)) << "\n";
  os << "  // layout is not a plane embedding; the rotation is the listed\n"
        "  // edge order and the per-vertex comments below\n";
  os << "  ordering=out;\n";
  if (weight) os << "  label=\"w=" << weight->str() << "\";\n";
  os << "  node [shape=circle, label=\"\", width=0.15];\n";
  const auto order = preorder(tree);
  for (const auto& visit : order) {
    os << "  // rotation " << visit.vertex << ":";
    for (Vertex nb : tree.rotation(visit.vertex)) os << ' ' << nb;
    os << "\n";
  }
  for (const auto& visit : order) {
    if (visit.parent >= 0) {
      os << "  " << visit.parent << " -- " << visit.vertex << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_ascii(const PlaneTree& tree, std::size_t index,
                         const std::optional<ExactRational>& weight) {
  std::ostringstream os;
  os << "tree " << index << "  " << format_tree(tree, tree.edge(0));
  if (weight) os << "  w=" << weight->str();
  os << "\n";
  for (const auto& visit : preorder(tree)) {
    if (visit.parent < 0) {
      os << "o\n";
    } else {
      os << visit.prefix << (visit.last ? "`-- " : "+-- ") << "o\n";
    }
  }
  return os.str();
}

}  // namespace planetrees

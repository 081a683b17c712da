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

#include <algorithm>
#include <random>
#include <stdexcept>
#include <variant>

#include "doctest.h"
#include "oracle.hpp"
#include "planetrees/canonical.hpp"
#include "planetrees/enumerate.hpp"

using namespace planetrees;

namespace {

const char* const kT1 = "((()())()())";
const char* const kT2 = "((()())(()())(()()))";

PlaneTree star(std::size_t leaves) {
  return parse_tree("(" + [&] {
    std::string s;
    for (std::size_t i = 0; i < leaves; ++i) s += "()";
    return s;
  }() + ")");
}

}  // namespace

TEST_SUITE_BEGIN("canonical");

TEST_CASE("rooted_code") {
  const PlaneTree p2 = parse_tree("(())");
  CHECK(rooted_code(p2, {0, 1}).str() == "(())");
  CHECK(rooted_code(p2, {1, 0}).str() == "(())");

  const PlaneTree p3 = parse_tree("(()())");  // center is vertex 0
  CHECK(rooted_code(p3, {1, 0}).str() == "((()))");
  CHECK(rooted_code(p3, {0, 1}).str() == "(()())");

  const PlaneTree s3 = star(3);
  for (Vertex leaf = 1; leaf <= 3; ++leaf) {
    CHECK(rooted_code(s3, {leaf, 0}).str() == "((()()))");
  }
  CHECK_THROWS_AS(rooted_code(s3, {1, 2}), std::invalid_argument);
}

TEST_CASE("canonical_code") {
  CHECK(canonical_code(parse_tree("(())")).str() == "(())");
  CHECK(canonical_code(parse_tree("(()())")).str() == "((()))");

  // T_1: brute-force minimum over its 10 rootings, attained twice.
  const PlaneTree t1 = parse_tree(kT1);
  std::vector<std::string> all;
  for (const auto& e : t1.directed_edges()) all.push_back(format_tree(t1, e));
  REQUIRE(all.size() == 10);
  const std::string best = *std::min_element(all.begin(), all.end());
  CHECK(canonical_code(t1).str() == best);
  CHECK(std::count(all.begin(), all.end(), best) == 2);
}

TEST_CASE("aut_order") {
  CHECK(aut_order(parse_tree(kT1)) == 2);
  CHECK(aut_order(parse_tree(kT2)) == 3);
  // star(1) is the single edge.
  for (std::size_t k = 1; k <= 7; ++k) CHECK(aut_order(star(k)) == (k == 1 ? 2 : k));
  CHECK(aut_order(parse_tree("(())")) == 2);
}

TEST_CASE("weight") {
  CHECK(weight(parse_tree(kT2)) == ExactRational(BigInt(1), BigInt(3)));
  CHECK(weight(parse_tree("(()())")).str() == "1/2");
  const auto trees = enumerate_trees(DualPassport({4, 2, 0, 1}));
  REQUIRE(trees.size() == 3);
  std::vector<std::string> ws;
  for (const auto& t : trees) ws.push_back(weight(t).str());
  std::sort(ws.begin(), ws.end());
  CHECK(ws == std::vector<std::string>{"1", "1", "1/2"});
}

TEST_CASE("symmetry_center on the (6,0,4) family") {
  const auto trees = enumerate_trees(DualPassport({6, 0, 4}));
  REQUIRE(trees.size() == 4);
  std::size_t asym = 0, edge = 0, vertex = 0;
  for (const auto& t : trees) {
    const auto c = symmetry_center(t);
    if (std::holds_alternative<Asymmetric>(c)) {
      ++asym;
      CHECK(aut_order(t) == 1);
    } else if (const auto* e = std::get_if<EdgeMidpoint>(&c)) {
      ++edge;
      CHECK(aut_order(t) == 2);
      // The middle spine edge joins two degree-3 vertices.
      CHECK(t.degree(e->u) == 3);
      CHECK(t.degree(e->v) == 3);
      const auto nb = t.rotation(e->u);
      CHECK(std::find(nb.begin(), nb.end(), e->v) != nb.end());
    } else {
      const auto& v = std::get<VertexCenter>(c);
      ++vertex;
      CHECK(v.order == 3);
      CHECK(t.degree(v.center) == 3);
    }
  }
  CHECK(asym == 1);
  CHECK(edge == 2);
  CHECK(vertex == 1);
  const Code t2 = canonical_code(parse_tree(kT2));
  CHECK(std::count_if(trees.begin(), trees.end(),
                      [&](const PlaneTree& t) { return canonical_code(t) == t2; }) == 1);
}

TEST_CASE("symmetry_center small cases") {
  CHECK(std::holds_alternative<EdgeMidpoint>(symmetry_center(parse_tree("(())"))));
  CHECK(symmetry_center(parse_tree("(()())")) == SymmetryCenter{VertexCenter{0, 2}});
  CHECK(symmetry_center(star(5)) == SymmetryCenter{VertexCenter{0, 5}});
  CHECK(std::holds_alternative<EdgeMidpoint>(symmetry_center(parse_tree(kT1))));
  CHECK(graph_center(parse_tree(kT1)) == std::vector<Vertex>{0, 1});
}

TEST_CASE("aut_order agrees with a direct automorphism count") {
  for (const auto& passport : feasible_passports(10)) {
    for (const auto& t : enumerate_trees(passport)) {
      const auto order = aut_order(t);
      REQUIRE(order == oracle::automorphism_count(t));
      REQUIRE((2 * (t.vertex_count() - 1)) % order == 0);
    }
  }
}

TEST_CASE("random trees: invariants of canonical form and symmetry center") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(trial % 25);
    const PlaneTree t = oracle::random_tree(n, rng);
    const Code canon = canonical_code(t);
    const auto order = aut_order(t);

    REQUIRE(order == oracle::automorphism_count(t));
    REQUIRE((2 * (n - 1)) % order == 0);
    REQUIRE(weight(t) == ExactRational(BigInt(1), BigInt(order)));
    REQUIRE(canonical_code(oracle::relabel(t, rng)) == canon);
    for (const auto& e : t.directed_edges()) {
      REQUIRE(canonical_code(parse_tree(rooted_code(t, e).str())) == canon);
    }
    std::size_t hits = 0;
    for (HalfEdge h = 0; h < static_cast<HalfEdge>(t.half_edge_count()); ++h) {
      if (is_canonical_rooting(t, h)) ++hits;
    }
    REQUIRE(hits == order);

    const auto c = symmetry_center(t);
    if (const auto* e = std::get_if<EdgeMidpoint>(&c)) {
      REQUIRE(order == 2);
      const auto nb = t.rotation(e->u);
      REQUIRE(std::find(nb.begin(), nb.end(), e->v) != nb.end());
    } else if (const auto* v = std::get_if<VertexCenter>(&c)) {
      REQUIRE(v->order == order);
      REQUIRE(order >= 2);
      REQUIRE(t.degree(v->center) % order == 0);
    } else {
      REQUIRE(order == 1);
    }
  }
}

TEST_SUITE_END();

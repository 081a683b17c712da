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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Runtime limits are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "oracle.hpp"
#include "planetrees/canonical.hpp"
#include "planetrees/enumerate.hpp"
#include "planetrees/identities.hpp"

using namespace planetrees;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

ExactRational q(long long p, long long r) { return ExactRational(BigInt(p), BigInt(r)); }

Outcome example_passport_4_2_0_1() {
  Outcome o;
  const auto trees = enumerate_trees(DualPassport({4, 2, 0, 1}));
  o.require(trees.size() == 3, "expected 3 trees");
  std::vector<ExactRational> ws;
  ExactRational sum;
  for (const auto& t : trees) {
    ws.push_back(weight(t));
    sum += ws.back();
  }
  std::sort(ws.begin(), ws.end());
  o.require(ws == std::vector<ExactRational>{q(1, 2), 1, 1}, "weights != {1, 1, 1/2}");
  o.require(sum == q(5, 2), "weighted sum != 5/2");
  o.require(sum == ExactRational(oracle::factorial(5),
                                 oracle::factorial(4) * oracle::factorial(2)),
            "weighted sum != 5!/(4! 2!)");
  return o;
}

Outcome example_passport_6_0_4() {
  Outcome o;
  const auto trees = enumerate_trees(DualPassport({6, 0, 4}));
  o.require(trees.size() == 4, "expected 4 trees");
  std::vector<ExactRational> ws;
  std::map<std::size_t, std::size_t> hist;
  ExactRational sum;
  std::size_t edge_centered = 0, vertex_order3 = 0;
  for (const auto& t : trees) {
    const auto order = aut_order(t);
    ++hist[order];
    ws.push_back(weight(t));
    sum += ws.back();
    const auto c = symmetry_center(t);
    if (std::holds_alternative<EdgeMidpoint>(c)) {
      ++edge_centered;
      o.require(order == 2, "edge-centered tree with aut order != 2");
    } else if (const auto* v = std::get_if<VertexCenter>(&c)) {
      o.require(v->order == order && t.degree(v->center) % order == 0,
                "vertex center inconsistent with aut order");
      if (order == 3 && t.degree(v->center) == 3) ++vertex_order3;
    } else {
      o.require(order == 1, "asymmetric classification with aut order != 1");
    }
  }
  std::sort(ws.begin(), ws.end());
  o.require(ws == std::vector<ExactRational>{q(1, 3), q(1, 2), q(1, 2), 1},
            "weights != {1, 1/2, 1/2, 1/3}");
  o.require(hist == std::map<std::size_t, std::size_t>{{1, 1}, {2, 2}, {3, 1}},
            "aut histogram != {1:1, 2:2, 3:1}");
  o.require(sum == q(7, 3), "weighted sum != 7/3");
  o.require(sum == ExactRational(catalan(4), BigInt(6)), "weighted sum != C_4/6");
  o.require(edge_centered >= 1, "no edge-centered tree among the order-2 trees");
  o.require(vertex_order3 == 1, "expected one order-3 tree centered at a degree-3 vertex");
  return o;
}

Outcome identity_exhaustive() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& p : feasible_passports(10)) {
    ++checked;
    BigInt den = 1;
    for (auto a : p.counts()) den *= oracle::factorial(a);
    const ExactRational expected(oracle::factorial(p.total_vertices() - 2), den);
    const auto census = weighted_census(p);
    o.require(census.weighted_sum == expected, "identity fails for " + p.str());
    o.require(gj_rhs(p) == expected, "gj_rhs disagrees for " + p.str());
  }
  o.require(checked > 0, "no passports checked");
  if (o.ok) o.detail = std::to_string(checked) + " passports";
  return o;
}

Outcome theorem_desk_scale() {
  Outcome o;
  const std::pair<std::size_t, std::size_t> asymmetric[] = {
      {3, 1}, {5, 6}, {9, 442}, {11, 4522}};
  for (auto [n, count] : asymmetric) {
    const auto census = weighted_census(theorem_passport(n));
    const ExactRational expected(oracle::factorial(2 * n),
                                 oracle::factorial(n + 2) * oracle::factorial(n));
    const auto tag = "n=" + std::to_string(n);
    o.require(expected.is_integer() && expected == ExactRational(BigInt(count)),
              tag + ": C_n/(n+2) != " + std::to_string(count));
    o.require(census.aut_histogram.size() == 1 && census.aut_histogram.count(1),
              tag + ": symmetric tree present");
    o.require(ExactRational(BigInt(census.tree_count)) == expected,
              tag + ": tree count != C_n/(n+2)");
  }
  for (std::size_t n : {1, 2, 4, 6, 7, 8, 10}) {
    const auto census = weighted_census(theorem_passport(n));
    const auto tag = "n=" + std::to_string(n);
    for (const auto& [order, c] : census.aut_histogram) {
      o.require(order == 1 || order == 2 || order == 3, tag + ": aut order outside {1,2,3}");
      if (order == 2) o.require(n % 2 == 0, tag + ": order 2 with odd n");
      if (order == 3) o.require(n % 3 == 1, tag + ": order 3 with n != 1 mod 3");
    }
  }
  return o;
}

Outcome divisibility() {
  Outcome o;
  std::size_t predicate_rows = 0;
  for (const auto& row : divisibility_table(500)) {
    const auto n = row.n;
    const BigInt direct =
        oracle::factorial(2 * n) / (oracle::factorial(n) * oracle::factorial(n + 1));
    o.require(row.catalan_n == direct, "C_" + std::to_string(n) + " mismatch");
    if (n % 2 == 1 && n % 3 != 1) {
      ++predicate_rows;
      o.require(row.predicate, "predicate flag wrong at n=" + std::to_string(n));
      o.require(direct % (n + 2) == 0 && row.divisible,
                "n+2 does not divide C_n at n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = std::to_string(predicate_rows) + " predicate rows";
  return o;
}

Outcome property_suite() {
  Outcome o;
  for (const auto& p : feasible_passports(10)) {
    const auto codes = enumerate_codes(p);
    // (c)
    for (std::size_t i = 1; i < codes.size(); ++i) {
      o.require(codes[i - 1] < codes[i], "output not strictly sorted for " + p.str());
    }
    for (const auto& code : codes) {
      const PlaneTree t = tree_from_code(code);
      // (a)
      std::vector<std::string> rootings;
      for (const auto& e : t.directed_edges()) rootings.push_back(format_tree(t, e));
      const auto best = *std::min_element(rootings.begin(), rootings.end());
      const auto mult = static_cast<std::size_t>(
          std::count(rootings.begin(), rootings.end(), best));
      const auto order = aut_order(t);
      o.require(order == mult, "aut_order != minimal-rooting multiplicity");
      o.require((2 * (t.vertex_count() - 1)) % order == 0, "aut_order does not divide 2(N-1)");
      // (b)
      for (const auto& w : rootings) {
        o.require(canonical_code(parse_tree(w)) == code, "round trip changed the class");
      }
    }
    // (d)
    if (p.total_vertices() <= 8) {
      const std::vector<std::uint32_t> counts(p.counts().begin(), p.counts().end());
      const auto groups = oracle::brute_force_classes(counts);
      std::vector<Code> expected;
      for (const auto& [w, size] : groups) {
        expected.push_back(Code(w));
        o.require(size * aut_order(parse_tree(w)) == 2 * (p.total_vertices() - 1),
                  "orbit size mismatch for " + p.str());
      }
      o.require(expected == codes, "brute-force oracle disagrees for " + p.str());
    }
  }
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1 passport (4,2,0,1): 3 trees, weights {1,1,1/2}, sum 5/2", 1.0,
       example_passport_4_2_0_1},
      {"AC2 passport (6,0,4): 4 trees, aut {1:1,2:2,3:1}, sum 7/3, centers", 1.0,
       example_passport_6_0_4},
      {"AC3 weighted-count identity for every passport with N <= 10", 60.0,
       identity_exhaustive},
      {"AC4 (n+2,0,n) census: asymmetric and C_n/(n+2) trees for n in {3,5,9,11}", 300.0,
       theorem_desk_scale},
      {"AC5 (n+2) | C_n for odd n, n != 1 mod 3, n <= 500", 5.0, divisibility},
      {"AC6 property suite (aut order, round trip, order, brute-force oracle)", 600.0,
       property_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "runtime limit " + std::to_string(c.limit_seconds) + " s exceeded";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}

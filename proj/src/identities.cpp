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

#include "planetrees/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "planetrees/canonical.hpp"
#include "planetrees/errors.hpp"

namespace planetrees {

namespace {

// Factorials 0!..max! built once per call.
std::vector<BigInt> factorials(std::size_t max) {
  std::vector<BigInt> f(max + 1);
  f[0] = 1;
  for (std::size_t i = 1; i <= max; ++i) f[i] = f[i - 1] * i;
  return f;
}

}  // namespace

ExactRational gj_rhs(const DualPassport& passport) {
  const auto n = passport.total_vertices();
  if (n < 2) {
    throw std::domain_error("(N-2)! is undefined for N = " + std::to_string(n));
  }
  const auto f = factorials(static_cast<std::size_t>(n));
  BigInt den = 1;
  for (auto a : passport.counts()) den *= f[a];
  return ExactRational(f[n - 2], den);
}

IdentityReport verify_identity(const DualPassport& passport) {
  IdentityReport r{passport, weighted_census(passport).weighted_sum,
                   gj_rhs(passport), false};
  r.equal = r.lhs == r.rhs;
  return r;
}

BigInt catalan(std::size_t n) {
  const auto f = factorials(std::max(2 * n, n + 1));
  return f[2 * n] / (f[n] * f[n + 1]);
}

DualPassport theorem_passport(std::size_t n) {
  if (n < 1) throw std::domain_error("theorem family needs n >= 1");
  return DualPassport({static_cast<std::uint32_t>(n + 2), 0,
                       static_cast<std::uint32_t>(n)});
}

bool divisibility_predicate(std::size_t n) { return n % 2 == 1 && n % 3 != 1; }

bool TheoremReport::holds() const {
  if (census.weighted_sum != quotient) return false;
  if (!centers_consistent) return false;
  const auto it = census.aut_histogram.find(1);
  const std::size_t asymmetric = it == census.aut_histogram.end() ? 0 : it->second;
  if (census.tree_count != asymmetric + edge_centered + vertex_centered) {
    return false;
  }
  if (predicate) {
    if (asymmetric != census.tree_count || !divisible) return false;
    if (BigInt(census.tree_count) * (n + 2) != catalan_n) return false;
  }
  return true;
}

TheoremReport theorem_check(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw ResourceLimit("theorem check for n = " + std::to_string(n) +
                        " exceeds the bound n <= " + std::to_string(bound));
  }
  TheoremReport r;
  r.n = n;
  r.passport = theorem_passport(n);
  const auto trees = enumerate_trees(r.passport);
  r.census = census_of(r.passport, trees);
  r.catalan_n = catalan(n);
  r.quotient = ExactRational(r.catalan_n, BigInt(n + 2));
  r.predicate = divisibility_predicate(n);
  r.divisible = r.quotient.is_integer();

  for (const auto& tree : trees) {
    const auto center = symmetry_center(tree);
    if (std::holds_alternative<EdgeMidpoint>(center)) {
      ++r.edge_centered;
      if (n % 2 != 0) r.centers_consistent = false;
    } else if (const auto* vc = std::get_if<VertexCenter>(&center)) {
      ++r.vertex_centered;
      if (tree.degree(vc->center) != 3 || vc->order != 3 || n % 3 != 1) {
        r.centers_consistent = false;
      }
    }
  }
  return r;
}

std::vector<DivisibilityRow> divisibility_table(std::size_t n_max,
                                                Strategy strategy) {
  std::vector<DivisibilityRow> rows(n_max);
  auto fill = [&](std::size_t n, BigInt c) {
    const bool divisible = c % (n + 2) == 0;
    rows[n - 1] = {n, std::move(c), n + 2, divisible, divisibility_predicate(n)};
  };
  if (strategy == Strategy::kSerial) {
    // C_n = C_{n-1} * 2(2n-1) / (n+1), exact at every step.
    BigInt c = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
      c = c * (2 * (2 * n - 1)) / (n + 1);
      fill(n, c);
    }
    return rows;
  }
  const auto count = static_cast<std::ptrdiff_t>(n_max);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(i) + 1;
    fill(n, catalan(n));
  }
  return rows;
}

}  // namespace planetrees

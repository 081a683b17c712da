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

#ifndef PLANETREES_IDENTITIES_HPP_
#define PLANETREES_IDENTITIES_HPP_

#include <cstddef>
#include <vector>

#include "planetrees/enumerate.hpp"
#include "planetrees/rational.hpp"
#include "planetrees/tree.hpp"

namespace planetrees {

// (N-2)! / (a_1! a_2! ... a_k!) with N = a_1 + ... + a_k. Feasibility is
// not required. Throws std::domain_error when N < 2.
ExactRational gj_rhs(const DualPassport& passport);

struct IdentityReport {
  DualPassport passport;
  ExactRational lhs;  // weighted tree count
  ExactRational rhs;  // factorial formula
  bool equal = false;
};

IdentityReport verify_identity(const DualPassport& passport);

// C_n = (2n)! / (n! (n+1)!).
BigInt catalan(std::size_t n);

// (n+2, 0, n): n + 2 leaves and n vertices of degree 3. Throws
// std::domain_error when n < 1.
DualPassport theorem_passport(std::size_t n);

// n odd and n not congruent to 1 mod 3.
bool divisibility_predicate(std::size_t n);

inline constexpr std::size_t kDefaultTheoremBound = 11;

struct TheoremReport {
  std::size_t n = 0;
  DualPassport passport{{1}};
  CensusReport census{DualPassport{{1}}, 0, {}, {}};
  BigInt catalan_n;
  ExactRational quotient;  // C_n / (n + 2)
  bool predicate = false;
  bool divisible = false;
  // Symmetric trees by center kind.
  std::size_t edge_centered = 0;
  std::size_t vertex_centered = 0;
  // Every symmetric tree is edge-centered with n even, or centered at a
  // degree-3 vertex with order 3 and n = 1 mod 3.
  bool centers_consistent = true;

  // All the report's internal invariants, including the divisibility
  // conclusion when the predicate holds.
  bool holds() const;
};

// Enumerates the family with passport (n+2, 0, n) and checks the census
// against C_n / (n+2). Throws ResourceLimit when n > bound.
TheoremReport theorem_check(std::size_t n,
                            std::size_t bound = kDefaultTheoremBound);

struct DivisibilityRow {
  std::size_t n;
  BigInt catalan_n;
  std::size_t modulus;  // n + 2
  bool divisible;
  bool predicate;
};

// Rows n = 1..n_max, pure integer arithmetic. The parallel strategy
// computes rows independently across OpenMP threads; the serial one walks
// the Catalan recurrence. Both return rows in ascending n.
std::vector<DivisibilityRow> divisibility_table(
    std::size_t n_max, Strategy strategy = Strategy::kParallel);

}  // namespace planetrees

#endif  // PLANETREES_IDENTITIES_HPP_

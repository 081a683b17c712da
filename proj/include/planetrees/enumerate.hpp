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

#ifndef PLANETREES_ENUMERATE_HPP_
#define PLANETREES_ENUMERATE_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "planetrees/rational.hpp"
#include "planetrees/tree.hpp"

namespace planetrees {

// Enumeration refuses passports with more vertices than this.
inline constexpr std::uint64_t kMaxEnumerationVertices = 26;

enum class Strategy {
  // Backtracking over every rooted code, deduplicated by canonical code in
  // an ordered set. Single-threaded; kept as the reference.
  kSerial,
  // Orderly generation: a rooted code is kept only when it is already the
  // canonical code of its tree. The search is split by prefix across
  // OpenMP threads.
  kParallel,
};

struct CensusReport {
  DualPassport passport;
  std::size_t tree_count = 0;
  ExactRational weighted_sum;
  std::map<std::size_t, std::size_t> aut_histogram;  // aut order -> trees
};

// Canonical codes of all plane trees with `passport`, strictly ascending.
// Throws InfeasiblePassport or ResourceLimit.
std::vector<Code> enumerate_codes(const DualPassport& passport,
                                  Strategy strategy = Strategy::kParallel);

// One tree per plane-isomorphism class, in canonical-code order. Each tree
// is built from its canonical code, so vertex 0 is the canonical root.
std::vector<PlaneTree> enumerate_trees(const DualPassport& passport,
                                       Strategy strategy = Strategy::kParallel);

CensusReport weighted_census(const DualPassport& passport,
                             Strategy strategy = Strategy::kParallel);

// Aggregates already-enumerated trees; exposed for callers that also need
// the trees themselves.
CensusReport census_of(const DualPassport& passport,
                       const std::vector<PlaneTree>& trees);

}  // namespace planetrees

#endif  // PLANETREES_ENUMERATE_HPP_

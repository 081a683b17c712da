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

#include "planetrees/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <omp.h>

#include "planetrees/canonical.hpp"
#include "planetrees/errors.hpp"

namespace planetrees {

namespace {

// Rooted codes are generated through their preorder child-count sequences:
// the root has deg(root) children and every other vertex deg(v) - 1. A
// sequence is valid iff the count of pending child slots stays positive
// until the last vertex. With a feasible passport the final slot count is
// forced to zero, so the only dead end is closing the tree early.
struct SearchState {
  std::vector<std::uint32_t> remaining;  // remaining[d] vertices of degree d
  std::vector<std::uint8_t> children;    // preorder child counts so far
  std::size_t slots = 0;
};

std::string code_from_children(const std::vector<std::uint8_t>& children) {
  std::string out;
  out.reserve(2 * children.size());
  std::vector<std::uint8_t> pending;
  for (auto c : children) {
    out.push_back('(');
    if (c > 0) {
      pending.push_back(c);
      continue;
    }
    out.push_back(')');
    while (!pending.empty() && --pending.back() == 0) {
      pending.pop_back();
      out.push_back(')');
    }
  }
  return out;
}

class Search {
 public:
  explicit Search(const DualPassport& passport)
      : total_(static_cast<std::size_t>(passport.total_vertices())) {
    initial_.remaining.assign(passport.max_degree() + 1, 0);
    for (std::size_t d = 1; d <= passport.max_degree(); ++d) {
      initial_.remaining[d] = passport.count(d);
    }
    initial_.children.reserve(total_);
  }

  const SearchState& initial() const { return initial_; }
  std::size_t total() const { return total_; }

  // Legal next placements from `s`, as degrees.
  template <typename Fn>
  void for_each_choice(const SearchState& s, Fn&& fn) const {
    const bool is_root = s.children.empty();
    const bool is_last = s.children.size() + 1 == total_;
    for (std::size_t d = 1; d < s.remaining.size(); ++d) {
      if (s.remaining[d] == 0) continue;
      if (!is_root) {
        const std::size_t after = s.slots - 1 + (d - 1);
        if (after == 0 && !is_last) continue;
      }
      fn(d);
    }
  }

  static void push(SearchState& s, std::size_t d) {
    const bool is_root = s.children.empty();
    --s.remaining[d];
    const auto kids = is_root ? d : d - 1;
    s.children.push_back(static_cast<std::uint8_t>(kids));
    s.slots = is_root ? d : s.slots - 1 + kids;
  }

  static void pop(SearchState& s, std::size_t d, std::size_t prev_slots) {
    ++s.remaining[d];
    s.children.pop_back();
    s.slots = prev_slots;
  }

  // Depth-first completion of `s`; `visit` gets each full sequence.
  template <typename Visit>
  void run(SearchState& s, Visit& visit) const {
    if (s.children.size() == total_) {
      visit(s.children);
      return;
    }
    for_each_choice(s, [&](std::size_t d) {
      const auto prev = s.slots;
      push(s, d);
      run(s, visit);
      pop(s, d, prev);
    });
  }

 private:
  std::size_t total_;
  SearchState initial_;
};

void check_enumerable(const DualPassport& passport) {
  if (!is_feasible(passport)) {
    throw InfeasiblePassport(
        "passport " + passport.str() + " violates the handshake condition: " +
        "degree sum " + std::to_string(passport.degree_sum()) + " != 2(N-1) = " +
        std::to_string(2 * (passport.total_vertices() - 1)));
  }
  if (passport.total_vertices() > kMaxEnumerationVertices) {
    throw ResourceLimit("passport " + passport.str() + " has " +
                        std::to_string(passport.total_vertices()) +
                        " vertices; enumeration is capped at " +
                        std::to_string(kMaxEnumerationVertices));
  }
}

std::vector<Code> enumerate_serial(const DualPassport& passport) {
  Search search(passport);
  std::set<std::string> seen;
  auto visit = [&](const std::vector<std::uint8_t>& children) {
    const PlaneTree tree =
        tree_from_code(Code::trusted(code_from_children(children)));
    seen.insert(canonical_code(tree).str());
  };
  SearchState s = search.initial();
  search.run(s, visit);
  std::vector<Code> out;
  out.reserve(seen.size());
  for (const auto& w : seen) out.push_back(Code::trusted(w));
  return out;
}

// Frontier of partial sequences deep enough to keep every thread busy.
std::vector<SearchState> split_frontier(const Search& search,
                                        std::size_t target) {
  std::vector<SearchState> frontier{search.initial()};
  while (frontier.size() < target) {
    std::vector<SearchState> next;
    bool grew = false;
    for (auto& s : frontier) {
      if (s.children.size() == search.total()) {
        next.push_back(std::move(s));
        continue;
      }
      search.for_each_choice(s, [&](std::size_t d) {
        SearchState child = s;
        Search::push(child, d);
        next.push_back(std::move(child));
      });
      grew = true;
    }
    frontier = std::move(next);
    if (!grew) break;
  }
  return frontier;
}

std::vector<Code> enumerate_parallel(const DualPassport& passport) {
  Search search(passport);
  const auto threads = static_cast<std::size_t>(omp_get_max_threads());
  std::vector<SearchState> frontier = split_frontier(search, 16 * threads);

  std::vector<std::vector<std::string>> found(frontier.size());
  const auto jobs = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < jobs; ++i) {
    auto& bucket = found[static_cast<std::size_t>(i)];
    auto visit = [&](const std::vector<std::uint8_t>& children) {
      std::string word = code_from_children(children);
      const PlaneTree tree = tree_from_code(Code::trusted(word));
      // Vertex 0's first half-edge leads to vertex 1: the generated rooting.
      if (is_canonical_rooting(tree, 0)) bucket.push_back(std::move(word));
    };
    SearchState s = frontier[static_cast<std::size_t>(i)];
    search.run(s, visit);
  }

  std::vector<Code> out;
  for (auto& bucket : found) {
    for (auto& w : bucket) out.push_back(Code::trusted(std::move(w)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Code> enumerate_codes(const DualPassport& passport,
                                  Strategy strategy) {
  check_enumerable(passport);
  return strategy == Strategy::kSerial ? enumerate_serial(passport)
                                       : enumerate_parallel(passport);
}

std::vector<PlaneTree> enumerate_trees(const DualPassport& passport,
                                       Strategy strategy) {
  std::vector<PlaneTree> out;
  for (const auto& code : enumerate_codes(passport, strategy)) {
    out.push_back(tree_from_code(code));
  }
  return out;
}

CensusReport census_of(const DualPassport& passport,
                       const std::vector<PlaneTree>& trees) {
  CensusReport report{passport, trees.size(), ExactRational{}, {}};
  for (const auto& t : trees) ++report.aut_histogram[aut_order(t)];
  for (const auto& [order, count] : report.aut_histogram) {
    report.weighted_sum +=
        ExactRational(BigInt(count), BigInt(order));
  }
  return report;
}

CensusReport weighted_census(const DualPassport& passport, Strategy strategy) {
  return census_of(passport, enumerate_trees(passport, strategy));
}

}  // namespace planetrees

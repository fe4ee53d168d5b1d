// Copyright 2026 The Authors.
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

#ifndef PLABIC_MUTATION_HPP
#define PLABIC_MUTATION_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "plabic/core.hpp"
#include "plabic/positroid.hpp"

namespace plabic {

// A square move: with S, Sab, Sbc, Scd, Sda present, Sac is exchanged for
// Sbd. Stored normalized so that a < b < c.
struct MutationSquare {
  Subset s;
  std::array<int, 4> abcd{};

  // Accepts any cyclically ordered (a, b, c, d) disjoint from s; throws
  // kInvalidArgument otherwise.
  static MutationSquare make(Subset s, int a, int b, int c, int d,
                             const Ground& ground);

  int a() const { return abcd[0]; }
  int b() const { return abcd[1]; }
  int c() const { return abcd[2]; }
  int d() const { return abcd[3]; }

  Subset removed() const { return s.with(a()).with(c()); }
  Subset added() const { return s.with(b()).with(d()); }
  // Sab, Sbc, Scd, Sda.
  std::array<Subset, 4> sides() const;
  // The square undoing this one.
  MutationSquare reversed() const;

  friend constexpr bool operator==(const MutationSquare&,
                                   const MutationSquare&) = default;
  friend constexpr auto operator<=>(const MutationSquare&,
                                    const MutationSquare&) = default;
};

std::vector<MutationSquare> find_mutable(const Collection& collection);

// Throws kSquareNotApplicable. With `verify`, re-checks pairwise weak
// separation of the result (kInternalAssertion on failure).
Collection apply_mutation(const Collection& collection,
                          const MutationSquare& square, bool verify = false);

// Whether Hab, Hbc, Hcd, Hda are all weakly separated from j. Requires
// |h| = k-2, (a, b, c, d) cyclically ordered outside h, and |j| = k;
// throws kPreconditionViolated otherwise.
bool cross_lemma_conclusion(Subset h, int a, int b, int c, int d, Subset j,
                            const Ground& ground);
// Whether Hac and Hbd are both weakly separated from j.
bool cross_lemma_hypotheses(Subset h, int a, int b, int c, int d, Subset j);

// No member of the positroid outside the collection is weakly separated
// from all of it.
bool is_maximal_in(const Collection& collection, const Positroid& positroid);

// Greedy: add the least compatible positroid member until none remain.
// Throws kNotWeaklySeparated or kInputNotInPositroid.
Collection complete_to_maximal(const Collection& base,
                               const Positroid& positroid);

struct FlipGraph {
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    MutationSquare square;  // takes nodes[from] to nodes[to]
  };

  std::vector<Collection> nodes;  // canonical order
  std::vector<Arc> arcs;          // from < to, sorted
  Collection frozen;

  std::optional<std::size_t> index_of(const Collection& c) const;
  bool connected() const;
};

struct FlipGraphOptions {
  // Compare the node set with enumerate_maximal; a mismatch throws
  // kDisconnected.
  bool cross_check = true;
  std::size_t max_nodes = 2'000'000;
};

// Mutation graph of maximal collections in the positroid containing
// frozen and the necklace. Throws kFrozenInvalid, kScaleExceeded.
FlipGraph flip_graph(const Positroid& positroid, const Collection& frozen,
                     const FlipGraphOptions& options = {});

// Every maximal weakly separated collection inside the positroid containing
// frozen and the necklace, by clique search over compatible members;
// independent of mutations. Canonical order.
std::vector<Collection> enumerate_maximal(const Positroid& positroid,
                                          const Collection& frozen,
                                          std::size_t max_results = 2'000'000);

}  // namespace plabic

#endif  // PLABIC_MUTATION_HPP

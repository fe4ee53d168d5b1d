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

// Mutation paths between maximal weakly separated collections that never
// drop a prescribed frozen collection.
//
// find_path grows the frozen collection one hole triangle at a time. With
// both endpoints maximal and containing the frozen set B, pick the least
// boundary edge (K, L) of the least hole of B and look at the triangle each
// endpoint places on (K, L) on the hole side:
//
//   * same color: the two apexes J1, J2 are compatible. Any maximal C'
//     containing B + J1 + J2 bridges the endpoints through two smaller
//     problems frozen at B + J1 and B + J2.
//   * different colors: the apexes and (K, L) are Hac, Hbd, Hab, Had for a
//     crossing a, b, c, d. Completing B + {Hac, Hab, Had, Hbc, Hcd} gives a
//     collection one square move away from one containing Hbd, and the two
//     halves recurse frozen at B + Hac and B + Hbd.
//
// Every geometric fact the construction leans on is checked as it runs and a
// failure raises kInternalAssertion.

#ifndef PLABIC_PATHFINDER_HPP
#define PLABIC_PATHFINDER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plabic/core.hpp"
#include "plabic/mutation.hpp"
#include "plabic/positroid.hpp"

namespace plabic {

struct MutationPath {
  Collection start;
  std::vector<MutationSquare> squares;
  Collection frozen;
  GrassmannNecklace necklace;

  // Replays the squares; throws kSquareNotApplicable on a broken path.
  Collection end() const;
};

struct PathfinderStats {
  std::size_t same_color_steps = 0;
  std::size_t crossing_steps = 0;
  std::size_t max_depth = 0;
  // Non-canonical edge choices and similar noteworthy events.
  std::vector<std::string> events;
};

// Throws kInputsNotMaximal, kFrozenNotCommon, kInternalAssertion.
MutationPath find_path(const Collection& from, const Collection& to,
                       const Collection& frozen, const Positroid& positroid,
                       PathfinderStats* stats = nullptr);

struct PathCheck {
  bool ok = true;
  // Position in the chain (0 = start) where the first violation shows up.
  std::optional<std::size_t> violation_index;
  std::string reason;
};

// Replays the path and checks that every collection is maximal, weakly
// separated, inside the positroid and contains the frozen collection and
// the necklace, and that each step is one square move.
PathCheck verify_path(const MutationPath& path, const Positroid& positroid);
PathCheck verify_path(const MutationPath& path);

// Shortest path in the frozen flip graph. Throws kEndpointsNotInGraph, or
// kDisconnected if the endpoints are not linked.
MutationPath bfs_path_oracle(const Collection& from, const Collection& to,
                             const Collection& frozen,
                             const Positroid& positroid);

}  // namespace plabic

#endif  // PLABIC_PATHFINDER_HPP

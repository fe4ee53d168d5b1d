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

#ifndef PLABIC_POSITROID_HPP
#define PLABIC_POSITROID_HPP

#include <optional>
#include <vector>

#include "plabic/core.hpp"
#include "plabic/geometry.hpp"

namespace plabic {

// True iff x comes strictly before y in the order i < i+1 < ... < i-1.
bool shifted_less(int x, int y, int i, const Ground& ground);

// Componentwise comparison after sorting both sets by the order starting at i.
bool gale_leq(Subset lhs, Subset rhs, int i, const Ground& ground);

// A cyclic sequence (I_1, ..., I_n) of k-subsets with
//   I_{i+1} contains I_i \ {i}, and I_{i+1} = I_i whenever i is not in I_i.
class GrassmannNecklace {
 public:
  const Ground& ground() const { return ground_; }
  const std::vector<Subset>& entries() const { return entries_; }
  // 1-based, cyclic.
  Subset at(int i) const { return entries_[(ground_.wrap(i)) - 1]; }

  Collection as_collection() const { return Collection(ground_, entries_); }
  // True if some entry is repeated.
  bool has_repeats() const;
  // The closed polygon pi(I_1), ..., pi(I_n).
  std::vector<Point> curve() const;

  friend bool operator==(const GrassmannNecklace&,
                         const GrassmannNecklace&) = default;

 private:
  friend GrassmannNecklace validate_necklace(const Ground&,
                                             std::vector<Subset>);
  Ground ground_;
  std::vector<Subset> entries_;
};

// Throws NecklaceError naming the first failing 1-based index and clause.
GrassmannNecklace validate_necklace(const Ground& ground,
                                   std::vector<Subset> entries);

// I_i = {i, i+1, ..., i+k-1} modulo n.
GrassmannNecklace uniform_necklace(const Ground& ground);

// Every necklace over the ground, in lexicographic order of entry bits.
std::vector<GrassmannNecklace> enumerate_necklaces(const Ground& ground);

bool in_positroid(const GrassmannNecklace& necklace, Subset s);

// All k-subsets that pass every Gale filter, ascending.
Collection positroid_members(const GrassmannNecklace& necklace);

class Positroid {
 public:
  explicit Positroid(GrassmannNecklace necklace);

  const GrassmannNecklace& necklace() const { return necklace_; }
  const Ground& ground() const { return necklace_.ground(); }
  const Collection& members() const { return members_; }
  bool contains(Subset s) const { return members_.contains(s); }
  bool is_uniform() const;

 private:
  GrassmannNecklace necklace_;
  Collection members_;
};

// Point-in-curve membership: pi(J) inside or on pi(I). Requires J weakly
// separated from every entry (kPreconditionViolated otherwise). The curve may
// touch itself at repeated entries.
bool geometric_membership_check(const GrassmannNecklace& necklace, Subset j);

}  // namespace plabic

#endif  // PLABIC_POSITROID_HPP

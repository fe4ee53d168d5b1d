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

// Ground-level combinatorics on the cyclically ordered set [n] = {1..n}:
// subsets as single machine words, cyclic intervals, and weak separation.

#ifndef PLABIC_CORE_HPP
#define PLABIC_CORE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "plabic/error.hpp"

namespace plabic {

inline constexpr int kMaxGround = 64;

struct Ground {
  int n = 0;
  int k = 0;

  // Throws kInvalidArgument unless 3 <= n <= 64 and 1 <= k <= n-1.
  static Ground make(int n, int k);

  std::uint64_t full_mask() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  // Reduce an arbitrary integer to [n].
  int wrap(int a) const { return ((a - 1) % n + n) % n + 1; }
  bool in_range(int a) const { return a >= 1 && a <= n; }

  friend bool operator==(const Ground&, const Ground&) = default;
};

// A subset of [n]; bit a-1 is set iff a is a member. Ordered as the unsigned
// integer value of its bits.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  // Elements must lie in [1, 64].
  static Subset of(std::initializer_list<int> elements);
  static Subset of(std::span<const int> elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int a) const { return (bits_ >> (a - 1)) & 1U; }
  constexpr bool contains(Subset other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  constexpr Subset with(int a) const {
    return Subset(bits_ | (std::uint64_t{1} << (a - 1)));
  }
  constexpr Subset without(int a) const {
    return Subset(bits_ & ~(std::uint64_t{1} << (a - 1)));
  }
  // Least element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }

  // Ascending list of 1-based elements.
  std::vector<int> elements() const;
  // "135" for n <= 9, "{1,3,5}" otherwise.
  std::string label(int n) const;

  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical sorted, duplicate-free family of subsets over one ground set.
class Collection {
 public:
  Collection() = default;
  explicit Collection(Ground ground) : ground_(ground) {}
  // Sorts and removes duplicates.
  Collection(Ground ground, std::vector<Subset> members);

  const Ground& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Subset s) const;
  bool contains_all(const Collection& other) const;
  // Returns false if already present.
  bool insert(Subset s);
  bool erase(Subset s);

  Collection united(const Collection& other) const;
  Collection intersected(const Collection& other) const;

  friend bool operator==(const Collection& a, const Collection& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  Ground ground_;
  std::vector<Subset> members_;
};

struct CollectionHash {
  std::size_t operator()(const Collection& c) const;
};

enum class Closure { kOpen, kClosed, kHalfOpenLeft, kHalfOpenRight };

// True iff some rotation of `elements` is strictly increasing.
bool cyclically_ordered(std::span<const int> elements, const Ground& ground);
bool cyclically_ordered(std::initializer_list<int> elements,
                        const Ground& ground);

// kHalfOpenLeft is (a, b], kHalfOpenRight is [a, b).
// For a == b: (a, a) = [n] \ {a} and [a, a] = [n].
Subset cyclic_interval(int a, int b, Closure closure, const Ground& ground);

// Both subsets must have the same size (any size is accepted, so helper sets
// of size k-1 or k+1 compare too).
bool weakly_separated(Subset lhs, Subset rhs, const Ground& ground);

// Unchecked variant for hot loops; ground size is irrelevant to the answer.
bool weakly_separated_unchecked(Subset lhs, Subset rhs);

bool is_ws_collection(const Collection& collection);

// True iff `s` is weakly separated from every member of `collection`.
bool ws_with_all(Subset s, const Collection& collection);

// All k-subsets of [n] in ascending order.
std::vector<Subset> all_subsets(const Ground& ground);
std::vector<Subset> all_subsets(int n, int size);

std::uint64_t binomial(int n, int r);

}  // namespace plabic

template <>
struct std::hash<plabic::Subset> {
  std::size_t operator()(plabic::Subset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // PLABIC_CORE_HPP

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

#include "plabic/positroid.hpp"

#include <algorithm>

namespace plabic {

namespace {

void check_element(int a, const Ground& ground) {
  if (!ground.in_range(a)) {
    throw Error(ErrorCode::kInvalidArgument,
                "element " + std::to_string(a) + " outside [1, " +
                    std::to_string(ground.n) + "]");
  }
}

// Rank of a in the order starting at i: i -> 0, i+1 -> 1, ..., i-1 -> n-1.
int shifted_rank(int a, int i, int n) { return (a - i + n) % n; }

// Rotate the bits so that element i lands on bit 0; then ascending bit order
// is the shifted order and Gale comparison is a popcount-prefix test.
std::uint64_t rotate_to(std::uint64_t bits, int i, int n) {
  const int s = i - 1;
  if (s == 0) return bits;
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << n) - 1;
  return ((bits >> s) | (bits << (n - s))) & mask;
}

bool gale_leq_unchecked(Subset lhs, Subset rhs, int i, int n) {
  // lhs <= rhs componentwise iff every prefix of the order holds at least as
  // many elements of lhs as of rhs.
  const std::uint64_t l = rotate_to(lhs.bits(), i, n);
  const std::uint64_t r = rotate_to(rhs.bits(), i, n);
  std::uint64_t prefix = 0;
  for (int t = 0; t < n; ++t) {
    prefix |= std::uint64_t{1} << t;
    if (std::popcount(l & prefix) < std::popcount(r & prefix)) return false;
  }
  return true;
}

}  // namespace

bool shifted_less(int x, int y, int i, const Ground& ground) {
  check_element(x, ground);
  check_element(y, ground);
  check_element(i, ground);
  return shifted_rank(x, i, ground.n) < shifted_rank(y, i, ground.n);
}

bool gale_leq(Subset lhs, Subset rhs, int i, const Ground& ground) {
  check_element(i, ground);
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "Gale comparison needs equal sizes");
  }
  if (((lhs.bits() | rhs.bits()) & ~ground.full_mask()) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "subset outside ground set");
  }
  return gale_leq_unchecked(lhs, rhs, i, ground.n);
}

bool GrassmannNecklace::has_repeats() const {
  std::vector<Subset> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::vector<Point> GrassmannNecklace::curve() const {
  std::vector<Point> out;
  out.reserve(entries_.size());
  for (Subset s : entries_) out.push_back(embed_point(s));
  return out;
}

GrassmannNecklace validate_necklace(const Ground& ground,
                                   std::vector<Subset> entries) {
  const int n = ground.n;
  if (static_cast<int>(entries.size()) != n) {
    throw NecklaceError(0, 0,
                        "necklace needs " + std::to_string(n) + " entries, got " +
                            std::to_string(entries.size()));
  }
  for (int i = 1; i <= n; ++i) {
    const Subset s = entries[i - 1];
    if (s.size() != ground.k || (s.bits() & ~ground.full_mask()) != 0) {
      throw NecklaceError(i, 0,
                          "entry " + std::to_string(i) + " is not a " +
                              std::to_string(ground.k) + "-subset of [" +
                              std::to_string(n) + "]");
    }
  }
  for (int i = 1; i <= n; ++i) {
    const Subset cur = entries[i - 1];
    const Subset next = entries[i % n];
    if (!next.contains(cur.without(i))) {
      throw NecklaceError(i, 1,
                          "I_" + std::to_string(i % n + 1) +
                              " does not contain I_" + std::to_string(i) +
                              " \\ {" + std::to_string(i) + "}");
    }
    if (!cur.contains(i) && next != cur) {
      throw NecklaceError(i, 2,
                          std::to_string(i) + " is not in I_" +
                              std::to_string(i) + " but I_" +
                              std::to_string(i % n + 1) + " != I_" +
                              std::to_string(i));
    }
  }
  GrassmannNecklace out;
  out.ground_ = ground;
  out.entries_ = std::move(entries);
  return out;
}

GrassmannNecklace uniform_necklace(const Ground& ground) {
  std::vector<Subset> entries;
  for (int i = 1; i <= ground.n; ++i) {
    Subset s;
    for (int t = 0; t < ground.k; ++t) s = s.with(ground.wrap(i + t));
    entries.push_back(s);
  }
  return validate_necklace(ground, std::move(entries));
}

std::vector<GrassmannNecklace> enumerate_necklaces(const Ground& ground) {
  const int n = ground.n;
  std::vector<GrassmannNecklace> out;
  std::vector<Subset> entries(n);
  // Fill I_1 freely, then each I_{i+1} is forced or differs from I_i by
  // swapping i out; close the cycle by checking the step from I_n to I_1.
  auto extend = [&](auto&& self, int i) -> void {
    const Subset cur = entries[i - 1];
    if (i == n) {
      const Subset first = entries[0];
      const bool ok = cur.contains(n) ? first.contains(cur.without(n))
                                      : first == cur;
      if (ok) out.push_back(validate_necklace(ground, entries));
      return;
    }
    if (!cur.contains(i)) {
      entries[i] = cur;
      self(self, i + 1);
      return;
    }
    const Subset base = cur.without(i);
    for (int j = 1; j <= n; ++j) {
      if (base.contains(j)) continue;
      entries[i] = base.with(j);
      self(self, i + 1);
    }
  };
  for (Subset first : all_subsets(ground)) {
    entries[0] = first;
    extend(extend, 1);
  }
  std::sort(out.begin(), out.end(),
            [](const GrassmannNecklace& a, const GrassmannNecklace& b) {
              return a.entries() < b.entries();
            });
  return out;
}

bool in_positroid(const GrassmannNecklace& necklace, Subset s) {
  const Ground& g = necklace.ground();
  for (int i = 1; i <= g.n; ++i) {
    if (!gale_leq_unchecked(necklace.at(i), s, i, g.n)) return false;
  }
  return true;
}

Collection positroid_members(const GrassmannNecklace& necklace) {
  std::vector<Subset> members;
  for (Subset s : all_subsets(necklace.ground())) {
    if (in_positroid(necklace, s)) members.push_back(s);
  }
  return Collection(necklace.ground(), std::move(members));
}

Positroid::Positroid(GrassmannNecklace necklace)
    : necklace_(std::move(necklace)), members_(positroid_members(necklace_)) {}

bool Positroid::is_uniform() const {
  return members_.size() == binomial(ground().n, ground().k);
}

bool geometric_membership_check(const GrassmannNecklace& necklace, Subset j) {
  const Ground& g = necklace.ground();
  if (j.size() != g.k || (j.bits() & ~g.full_mask()) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "not a k-subset of the ground");
  }
  for (Subset e : necklace.entries()) {
    if (!weakly_separated_unchecked(e, j)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  j.label(g.n) + " is not weakly separated from necklace entry " +
                      e.label(g.n));
    }
  }
  const std::vector<Point> curve = necklace.curve();
  return point_inside_curve(embed_point(j), curve) != Location::kOutside;
}

}  // namespace plabic

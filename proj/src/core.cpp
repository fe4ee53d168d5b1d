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

#include "plabic/core.hpp"

#include <algorithm>

namespace plabic {

Ground Ground::make(int n, int k) {
  if (n < 3 || n > kMaxGround) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground size n=" + std::to_string(n) + " outside [3, 64]");
  }
  if (k < 1 || k > n - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset size k=" + std::to_string(k) + " outside [1, n-1]");
  }
  return Ground{n, k};
}

Subset Subset::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::of(std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int a : elements) {
    if (a < 1 || a > kMaxGround) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element " + std::to_string(a) + " outside [1, 64]");
    }
    bits |= std::uint64_t{1} << (a - 1);
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string Subset::label(int n) const {
  std::string out;
  if (n <= 9) {
    for (int a : elements()) out += static_cast<char>('0' + a);
    return out;
  }
  out = "{";
  bool first = true;
  for (int a : elements()) {
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

Collection::Collection(Ground ground, std::vector<Subset> members)
    : ground_(ground), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool Collection::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool Collection::contains_all(const Collection& other) const {
  return std::includes(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end());
}

bool Collection::insert(Subset s) {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, s);
  return true;
}

bool Collection::erase(Subset s) {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return false;
  members_.erase(it);
  return true;
}

Collection Collection::united(const Collection& other) const {
  std::vector<Subset> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  Collection c(ground_);
  c.members_ = std::move(out);
  return c;
}

Collection Collection::intersected(const Collection& other) const {
  std::vector<Subset> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  Collection c(ground_);
  c.members_ = std::move(out);
  return c;
}

std::size_t CollectionHash::operator()(const Collection& c) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Subset s : c.members()) {
    h ^= s.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {

void check_element(int a, const Ground& ground) {
  if (!ground.in_range(a)) {
    throw Error(ErrorCode::kInvalidArgument,
                "element " + std::to_string(a) + " outside [1, " +
                    std::to_string(ground.n) + "]");
  }
}

void check_subset(Subset s, const Ground& ground) {
  if ((s.bits() & ~ground.full_mask()) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset " + s.label(64) + " not inside [" +
                    std::to_string(ground.n) + "]");
  }
}

}  // namespace

bool cyclically_ordered(std::span<const int> elements, const Ground& ground) {
  std::uint64_t seen = 0;
  for (int a : elements) {
    check_element(a, ground);
    std::uint64_t bit = std::uint64_t{1} << (a - 1);
    if (seen & bit) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate element " + std::to_string(a));
    }
    seen |= bit;
  }
  // A rotation is increasing iff the sequence descends at most once cyclically.
  const std::size_t r = elements.size();
  int descents = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (elements[i] > elements[(i + 1) % r]) ++descents;
  }
  return descents <= 1;
}

bool cyclically_ordered(std::initializer_list<int> elements,
                        const Ground& ground) {
  return cyclically_ordered(
      std::span<const int>(elements.begin(), elements.size()), ground);
}

Subset cyclic_interval(int a, int b, Closure closure, const Ground& ground) {
  check_element(a, ground);
  check_element(b, ground);
  Subset open;
  if (a == b) {
    open = Subset(ground.full_mask()).without(a);
  } else {
    for (int i = ground.wrap(a + 1); i != b; i = ground.wrap(i + 1)) {
      open = open.with(i);
    }
  }
  switch (closure) {
    case Closure::kOpen: return open;
    case Closure::kClosed: return open.with(a).with(b);
    case Closure::kHalfOpenLeft: return open.with(b);
    case Closure::kHalfOpenRight: return open.with(a);
  }
  return open;
}

bool weakly_separated_unchecked(Subset lhs, Subset rhs) {
  const std::uint64_t only_lhs = lhs.bits() & ~rhs.bits();
  const std::uint64_t only_rhs = rhs.bits() & ~lhs.bits();
  if (only_lhs == 0 || only_rhs == 0) return true;
  // Sweep the circle; the two differences occupy disjoint arcs iff the
  // sequence of labels switches sides at most twice.
  const std::uint64_t marked = only_lhs | only_rhs;
  const int top = 63 - std::countl_zero(marked);
  bool prev = (only_lhs >> top) & 1U;
  int switches = 0;
  for (std::uint64_t b = marked; b != 0; b &= b - 1) {
    const bool side = (only_lhs >> std::countr_zero(b)) & 1U;
    if (side != prev) {
      if (++switches > 2) return false;
      prev = side;
    }
  }
  return true;
}

bool weakly_separated(Subset lhs, Subset rhs, const Ground& ground) {
  check_subset(lhs, ground);
  check_subset(rhs, ground);
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weak separation needs equal sizes, got " +
                    std::to_string(lhs.size()) + " and " +
                    std::to_string(rhs.size()));
  }
  return weakly_separated_unchecked(lhs, rhs);
}

bool is_ws_collection(const Collection& collection) {
  const auto& m = collection.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!weakly_separated_unchecked(m[i], m[j])) return false;
    }
  }
  return true;
}

bool ws_with_all(Subset s, const Collection& collection) {
  for (Subset t : collection) {
    if (!weakly_separated_unchecked(s, t)) return false;
  }
  return true;
}

std::vector<Subset> all_subsets(int n, int size) {
  std::vector<Subset> out;
  if (size < 0 || size > n) return out;
  if (size == 0) return {Subset()};
  // Gosper's hack walks same-popcount words in increasing order.
  std::uint64_t x = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  while (true) {
    out.emplace_back(x);
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0) break;
    x = (((r ^ x) >> 2) / c) | r;
    if (limit != 0 && x >= limit) break;
  }
  return out;
}

std::vector<Subset> all_subsets(const Ground& ground) {
  return all_subsets(ground.n, ground.k);
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace plabic

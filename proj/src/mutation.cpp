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

#include "plabic/mutation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "plabic/geometry.hpp"
#include "plabic/tiling.hpp"

namespace plabic {

MutationSquare MutationSquare::make(Subset s, int a, int b, int c, int d,
                                    const Ground& ground) {
  const std::array<int, 4> q{a, b, c, d};
  for (int x : q) {
    if (!ground.in_range(x) || s.contains(x)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "square element " + std::to_string(x) +
                      " outside ground or inside S");
    }
  }
  if ((s.bits() & ~ground.full_mask()) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "square base outside ground");
  }
  if (s.size() != ground.k - 2) {
    throw Error(ErrorCode::kInvalidArgument, "square base must have k-2 elements");
  }
  if (!cyclically_ordered(q, ground)) {
    throw Error(ErrorCode::kInvalidArgument,
                "square elements are not cyclically ordered");
  }
  MutationSquare sq;
  sq.s = s;
  sq.abcd = a < c ? q : std::array<int, 4>{c, d, a, b};
  return sq;
}

std::array<Subset, 4> MutationSquare::sides() const {
  return {s.with(a()).with(b()), s.with(b()).with(c()), s.with(c()).with(d()),
          s.with(d()).with(a())};
}

MutationSquare MutationSquare::reversed() const {
  MutationSquare sq;
  sq.s = s;
  sq.abcd = b() < d() ? std::array<int, 4>{b(), c(), d(), a()}
                      : std::array<int, 4>{d(), a(), b(), c()};
  return sq;
}

std::vector<MutationSquare> find_mutable(const Collection& collection) {
  const int n = collection.ground().n;
  std::vector<MutationSquare> out;
  for (Subset x : collection) {
    const std::vector<int> elems = x.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        const int a = elems[i];
        const int c = elems[j];
        const Subset s = x.without(a).without(c);
        std::vector<int> inner;
        std::vector<int> outer;
        for (int e = 1; e <= n; ++e) {
          if (x.contains(e)) continue;
          if (e > a && e < c) {
            if (collection.contains(s.with(a).with(e)) &&
                collection.contains(s.with(e).with(c))) {
              inner.push_back(e);
            }
          } else if (collection.contains(s.with(c).with(e)) &&
                     collection.contains(s.with(e).with(a))) {
            outer.push_back(e);
          }
        }
        for (int b : inner) {
          for (int d : outer) {
            MutationSquare sq;
            sq.s = s;
            sq.abcd = {a, b, c, d};
            out.push_back(sq);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Collection apply_mutation(const Collection& collection,
                          const MutationSquare& square, bool verify) {
  const int n = collection.ground().n;
  bool ok = collection.contains(square.removed()) &&
            !collection.contains(square.added());
  for (Subset side : square.sides()) ok = ok && collection.contains(side);
  if (!ok) {
    throw Error(ErrorCode::kSquareNotApplicable,
                "square exchanging " + square.removed().label(n) + " for " +
                    square.added().label(n) + " does not apply");
  }
  Collection out = collection;
  out.erase(square.removed());
  out.insert(square.added());
  if (verify && !is_ws_collection(out)) {
    throw Error(ErrorCode::kInternalAssertion,
                "mutation produced a collection that is not weakly separated");
  }
  return out;
}

bool cross_lemma_hypotheses(Subset h, int a, int b, int c, int d, Subset j) {
  return weakly_separated_unchecked(h.with(a).with(c), j) &&
         weakly_separated_unchecked(h.with(b).with(d), j);
}

bool cross_lemma_conclusion(Subset h, int a, int b, int c, int d, Subset j,
                            const Ground& ground) {
  const std::array<int, 4> q{a, b, c, d};
  bool ok = h.size() == ground.k - 2 && j.size() == ground.k &&
            ((h.bits() | j.bits()) & ~ground.full_mask()) == 0;
  for (int x : q) ok = ok && ground.in_range(x) && !h.contains(x);
  if (!ok || !cyclically_ordered(q, ground)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "cross lemma needs |H| = k-2 and cyclically ordered a,b,c,d "
                "outside H");
  }
  return weakly_separated_unchecked(h.with(a).with(b), j) &&
         weakly_separated_unchecked(h.with(b).with(c), j) &&
         weakly_separated_unchecked(h.with(c).with(d), j) &&
         weakly_separated_unchecked(h.with(d).with(a), j);
}

bool is_maximal_in(const Collection& collection, const Positroid& positroid) {
  for (Subset s : positroid.members()) {
    if (!collection.contains(s) && ws_with_all(s, collection)) return false;
  }
  return true;
}

Collection complete_to_maximal(const Collection& base,
                               const Positroid& positroid) {
  const GrassmannNecklace& necklace = positroid.necklace();
  const int n = positroid.ground().n;
  Collection out = base.united(necklace.as_collection());
  for (Subset s : out) {
    if (!positroid.contains(s)) {
      throw Error(ErrorCode::kInputNotInPositroid,
                  s.label(n) + " is not in the positroid");
    }
  }
  if (!is_ws_collection(out)) {
    throw Error(ErrorCode::kNotWeaklySeparated,
                "input (with necklace) is not weakly separated");
  }
  // Adding members only shrinks the compatible set, so one ascending pass
  // picks the least compatible member at every step.
  for (Subset s : positroid.members()) {
    if (!out.contains(s) && ws_with_all(s, out)) out.insert(s);
  }
  const Embedding e = embed(build_complex(out, necklace));
  if (!e.fills_curve()) {
    throw Error(ErrorCode::kInternalAssertion,
                "completed collection does not fill the necklace curve");
  }
  return out;
}

std::optional<std::size_t> FlipGraph::index_of(const Collection& c) const {
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), c,
      [](const Collection& x, const Collection& y) {
        return x.members() < y.members();
      });
  if (it == nodes.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

bool FlipGraph::connected() const {
  if (nodes.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (const Arc& a : arcs) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  std::vector<char> seen(nodes.size());
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == nodes.size();
}

namespace {

Collection validated_frozen(const Positroid& positroid,
                            const Collection& frozen) {
  const int n = positroid.ground().n;
  if (!(frozen.ground() == positroid.ground()) && !frozen.empty()) {
    throw Error(ErrorCode::kFrozenInvalid, "frozen ground mismatch");
  }
  Collection fixed = positroid.necklace().as_collection();
  for (Subset s : frozen) fixed.insert(s);
  for (Subset s : fixed) {
    if (!positroid.contains(s)) {
      throw Error(ErrorCode::kFrozenInvalid,
                  s.label(n) + " is not in the positroid");
    }
  }
  if (!is_ws_collection(fixed)) {
    throw Error(ErrorCode::kFrozenInvalid,
                "frozen collection (with necklace) is not weakly separated");
  }
  return fixed;
}

struct NodeKeyHash {
  std::size_t operator()(const std::vector<Subset>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Subset s : v) h ^= s.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

FlipGraph flip_graph(const Positroid& positroid, const Collection& frozen,
                     const FlipGraphOptions& options) {
  const Collection fixed = validated_frozen(positroid, frozen);

  std::vector<Collection> found;
  std::unordered_map<std::vector<Subset>, std::size_t, NodeKeyHash> index;
  std::vector<std::tuple<std::size_t, std::size_t, MutationSquare>> raw_arcs;

  found.push_back(complete_to_maximal(fixed, positroid));
  index.emplace(found.back().members(), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const Collection current = found[u];
    for (const MutationSquare& sq : find_mutable(current)) {
      if (fixed.contains(sq.removed()) || !positroid.contains(sq.added())) {
        continue;
      }
      Collection next = apply_mutation(current, sq);
      auto [it, inserted] = index.emplace(next.members(), found.size());
      if (inserted) {
        if (found.size() >= options.max_nodes) {
          throw Error(ErrorCode::kScaleExceeded,
                      "flip graph exceeds " + std::to_string(options.max_nodes) +
                          " nodes");
        }
        found.push_back(std::move(next));
        queue.push_back(it->second);
      }
      if (u < it->second) raw_arcs.emplace_back(u, it->second, sq);
    }
  }

  // Renumber in canonical order.
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return found[x].members() < found[y].members();
  });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  FlipGraph g;
  g.frozen = Collection(positroid.ground(), frozen.members());
  for (std::size_t i : order) g.nodes.push_back(std::move(found[i]));
  for (auto& [u, w, sq] : raw_arcs) {
    std::size_t from = rank[u];
    std::size_t to = rank[w];
    MutationSquare square = sq;
    if (from > to) {
      std::swap(from, to);
      square = square.reversed();
    }
    g.arcs.push_back({from, to, square});
  }
  std::sort(g.arcs.begin(), g.arcs.end(), [](const FlipGraph::Arc& x,
                                             const FlipGraph::Arc& y) {
    return std::tie(x.from, x.to, x.square) < std::tie(y.from, y.to, y.square);
  });

  if (options.cross_check) {
    const std::vector<Collection> all =
        enumerate_maximal(positroid, frozen, options.max_nodes);
    if (all != g.nodes) {
      throw Error(ErrorCode::kDisconnected,
                  "mutation search reached " + std::to_string(g.nodes.size()) +
                      " of " + std::to_string(all.size()) +
                      " maximal collections containing the frozen set");
    }
  }
  return g;
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t size) : words_((size + 63) / 64) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w != 0; });
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        f(i * 64 + std::countr_zero(w));
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

std::vector<Collection> enumerate_maximal(const Positroid& positroid,
                                          const Collection& frozen,
                                          std::size_t max_results) {
  const Collection fixed = validated_frozen(positroid, frozen);
  std::vector<Subset> cand;
  for (Subset s : positroid.members()) {
    if (!fixed.contains(s) && ws_with_all(s, fixed)) cand.push_back(s);
  }
  const std::size_t m = cand.size();
  std::vector<Bits> nbr(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (weakly_separated_unchecked(cand[i], cand[j])) {
        nbr[i].set(j);
        nbr[j].set(i);
      }
    }
  }

  // Maximal cliques of the compatibility graph (Bron-Kerbosch with pivot).
  std::vector<Collection> out;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, Bits p, Bits x) -> void {
    if (!p.any() && !x.any()) {
      Collection c = fixed;
      for (std::size_t i : chosen) c.insert(cand[i]);
      if (out.size() >= max_results) {
        throw Error(ErrorCode::kScaleExceeded,
                    "more than " + std::to_string(max_results) +
                        " maximal collections");
      }
      out.push_back(std::move(c));
      return;
    }
    std::size_t pivot = 0;
    int best = -1;
    (p | x).for_each([&](std::size_t u) {
      const int c = (p & nbr[u]).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    std::vector<std::size_t> branch;
    p.minus(nbr[pivot]).for_each([&](std::size_t v) { branch.push_back(v); });
    for (std::size_t v : branch) {
      chosen.push_back(v);
      self(self, p & nbr[v], x & nbr[v]);
      chosen.pop_back();
      p.reset(v);
      x.set(v);
    }
  };
  Bits all(m);
  for (std::size_t i = 0; i < m; ++i) all.set(i);
  search(search, all, Bits(m));
  std::sort(out.begin(), out.end(), [](const Collection& a, const Collection& b) {
    return a.members() < b.members();
  });
  return out;
}

}  // namespace plabic

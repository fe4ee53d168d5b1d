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


// Brute-force reference implementations. These deliberately avoid the
// library's own predicates so they can be used to check them.

#ifndef PLABIC_TESTS_ORACLES_HPP
#define PLABIC_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "plabic/core.hpp"

namespace oracle {

using plabic::Collection;
using plabic::Ground;
using plabic::Subset;

inline std::vector<int> elems(Subset s, int n) {
  std::vector<int> v;
  for (int a = 1; a <= n; ++a)
    if ((s.bits() >> (a - 1)) & 1U) v.push_back(a);
  return v;
}

inline Subset from(const std::vector<int>& v) {
  std::uint64_t bits = 0;
  for (int a : v) bits |= std::uint64_t{1} << (a - 1);
  return Subset(bits);
}

// Some rotation of the sequence is strictly increasing.
inline bool cyc(std::vector<int> v) {
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (std::is_sorted(v.begin(), v.end()) &&
        std::adjacent_find(v.begin(), v.end()) == v.end())
      return true;
    std::rotate(v.begin(), v.begin() + 1, v.end());
  }
  return false;
}

// Literal definition: no cyclically ordered a, b, c, d with a, c in I - J
// and b, d in J - I.
inline bool ws_by_quadruples(Subset i, Subset j, int n) {
  const auto x = elems(Subset(i.bits() & ~j.bits()), n);
  const auto y = elems(Subset(j.bits() & ~i.bits()), n);
  for (int a : x)
    for (int c : x)
      for (int b : y)
        for (int d : y)
          if (a != c && b != d && cyc({a, b, c, d})) return false;
  return true;
}

inline bool ws_all(const std::vector<Subset>& c, int n) {
  for (Subset p : c)
    for (Subset q : c)
      if (!ws_by_quadruples(p, q, n)) return false;
  return true;
}

inline Subset rotate(Subset s, int n) {
  std::vector<int> v;
  for (int a : elems(s, n)) v.push_back(a % n + 1);
  return from(v);
}

inline Subset reflect(Subset s, int n) {
  std::vector<int> v;
  for (int a : elems(s, n)) v.push_back(n + 1 - a);
  return from(v);
}

inline std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
    if (std::popcount(b) == k) out.emplace_back(b);
  return out;
}

// A 13-element maximal collection in uniform (7,3).
inline Collection heptagon() {
  std::vector<Subset> m;
  for (const auto& v : std::vector<std::vector<int>>{
           {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {1, 6, 7},
           {1, 2, 7}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 2, 6}, {3, 5, 6},
           {1, 5, 6}})
    m.push_back(from(v));
  return Collection(Ground::make(7, 3), m);
}

// Gale order by explicit ranks: rank_i(a) = (a - i) mod n.
inline bool gale(Subset p, Subset q, int i, int n) {
  auto ranks = [&](Subset s) {
    std::vector<int> r;
    for (int a : elems(s, n)) r.push_back(((a - i) % n + n) % n);
    std::sort(r.begin(), r.end());
    return r;
  };
  const auto rp = ranks(p), rq = ranks(q);
  if (rp.size() != rq.size()) return false;
  for (std::size_t t = 0; t < rp.size(); ++t)
    if (rp[t] > rq[t]) return false;
  return true;
}

// Necklace clauses read literally, indices 1-based cyclic.
inline bool necklace_ok(const std::vector<Subset>& e, int n) {
  for (int i = 1; i <= n; ++i) {
    const Subset cur = e[i - 1], next = e[i % n];
    const std::uint64_t drop = cur.bits() & ~(std::uint64_t{1} << (i - 1));
    if ((drop & ~next.bits()) != 0) return false;
    if (!((cur.bits() >> (i - 1)) & 1U) && cur != next) return false;
  }
  return true;
}

inline std::vector<Subset> positroid(const std::vector<Subset>& necklace,
                                     int n, int k) {
  std::vector<Subset> out;
  for (Subset j : k_subsets(n, k)) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = gale(necklace[i - 1], j, i, n);
    if (ok) out.push_back(j);
  }
  return out;
}

// All maximal pairwise weakly separated subfamilies of `candidates` that
// contain `forced`, by include/exclude backtracking. An excluded candidate
// must end up clashing with something chosen; branches where that becomes
// impossible are cut.
inline std::set<std::vector<Subset>> maximal_families(
    const std::vector<Subset>& candidates, const std::vector<Subset>& forced,
    int n) {
  std::vector<Subset> pool;
  for (Subset s : candidates)
    if (std::find(forced.begin(), forced.end(), s) == forced.end()) {
      bool ok = true;
      for (Subset f : forced) ok = ok && ws_by_quadruples(s, f, n);
      if (ok) pool.push_back(s);
    }
  const std::size_t m = pool.size();
  std::vector<std::vector<char>> compat(m, std::vector<char>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      compat[a][b] = ws_by_quadruples(pool[a], pool[b], n);

  std::set<std::vector<Subset>> out;
  std::vector<std::size_t> chosen, excluded;
  std::function<void(std::size_t)> go = [&](std::size_t idx) {
    // Every excluded candidate needs a blocker among chosen or still-open
    // compatible candidates.
    for (std::size_t x : excluded) {
      bool blocked = false;
      for (std::size_t c : chosen) blocked = blocked || !compat[x][c];
      for (std::size_t r = idx; r < m && !blocked; ++r) {
        bool open = true;
        for (std::size_t c : chosen) open = open && compat[r][c];
        blocked = open && !compat[x][r];
      }
      if (!blocked) return;
    }
    if (idx == m) {
      std::vector<Subset> fam(forced.begin(), forced.end());
      for (std::size_t c : chosen) fam.push_back(pool[c]);
      std::sort(fam.begin(), fam.end());
      out.insert(fam);
      return;
    }
    bool fits = true;
    for (std::size_t c : chosen) fits = fits && compat[idx][c];
    if (fits) {
      chosen.push_back(idx);
      go(idx + 1);
      chosen.pop_back();
    }
    excluded.push_back(idx);
    go(idx + 1);
    excluded.pop_back();
  };
  go(0);
  return out;
}

// Triangulations of the convex polygon 1..n, each as its sorted set of
// diagonals (a < b).
inline std::set<std::vector<std::pair<int, int>>> triangulations(int n) {
  std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> sub =
      [&](int lo, int hi) -> std::vector<std::vector<std::pair<int, int>>> {
    if (hi - lo < 2) return {{}};
    std::vector<std::vector<std::pair<int, int>>> res;
    for (int m = lo + 1; m < hi; ++m)
      for (const auto& left : sub(lo, m))
        for (const auto& right : sub(m, hi)) {
          auto t = left;
          t.insert(t.end(), right.begin(), right.end());
          if (m - lo > 1) t.emplace_back(lo, m);
          if (hi - m > 1) t.emplace_back(m, hi);
          res.push_back(t);
        }
    return res;
  };
  std::set<std::vector<std::pair<int, int>>> out;
  for (auto t : sub(1, n)) {
    std::sort(t.begin(), t.end());
    out.insert(t);
  }
  return out;
}

inline std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace oracle

#endif  // PLABIC_TESTS_ORACLES_HPP

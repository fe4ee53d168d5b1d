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

#include "plabic/pathfinder.hpp"

#include <algorithm>
#include <deque>

#include "plabic/geometry.hpp"
#include "plabic/tiling.hpp"

namespace plabic {

Collection MutationPath::end() const {
  Collection c = start;
  for (const MutationSquare& sq : squares) c = apply_mutation(c, sq);
  return c;
}

namespace {

[[noreturn]] void internal(const std::string& what) {
  throw Error(ErrorCode::kInternalAssertion, what);
}

int side_of(Point k, Point l, Point x) {
  const std::int64_t o = orient(k, l, x);
  return (o > 0) - (o < 0);
}

// The triangle one maximal collection places on (K, L) towards the hole.
struct Apex {
  Subset vertex;
  Color color;
};

class PathBuilder {
 public:
  PathBuilder(const Positroid& positroid, PathfinderStats* stats)
      : positroid_(positroid), stats_(stats) {}

  void run(const Collection& c1, const Collection& c2, const Collection& fixed,
           std::vector<MutationSquare>& out, std::size_t depth) {
    if (stats_) stats_->max_depth = std::max(stats_->max_depth, depth);
    if (c1 == c2) return;
    const int n = positroid_.ground().n;
    const std::vector<Hole> holes =
        find_holes(fixed, c1, positroid_.necklace());
    if (holes.empty()) {
      internal("frozen collection has no holes but the endpoints differ");
    }
    bool first = true;
    for (const Hole& hole : holes) {
      for (const Edge& edge : hole.boundary_edges) {
        if (try_edge(c1, c2, fixed, hole, edge, out, depth)) {
          if (!first && stats_) {
            stats_->events.push_back("used non-canonical boundary edge " +
                                     edge.first.label(n) + "-" +
                                     edge.second.label(n));
          }
          return;
        }
        first = false;
      }
    }
    internal("no hole boundary edge lies in a common face of both endpoints");
  }

 private:
  // Side of (K, L) holding the hole next to that edge: +1 or -1.
  static int hole_side(const Hole& hole, const Edge& edge) {
    const Point k = embed_point(edge.first);
    const Point l = embed_point(edge.second);
    for (const Triangle& t : hole.triangles) {
      int hits = 0;
      Subset apex;
      for (Subset v : t.vertices) {
        if (v == edge.first || v == edge.second) {
          ++hits;
        } else {
          apex = v;
        }
      }
      if (hits == 2) {
        const int s = side_of(k, l, embed_point(apex));
        if (s == 0) internal("degenerate hole triangle");
        return s;
      }
    }
    internal("hole boundary edge has no hole triangle");
  }

  static std::optional<Apex> apex_on_side(const Collection& c, const Edge& edge,
                                          int side) {
    const Subset k = edge.first;
    const Subset l = edge.second;
    const Point pk = embed_point(k);
    const Point pl = embed_point(l);
    const Subset meet = k & l;
    const Subset join = k | l;
    std::optional<Apex> found;
    for (Color color : {Color::kWhite, Color::kBlack}) {
      // Members of the clique in cyclic order (ascending added/removed
      // element, matching the tiling's convention).
      std::vector<std::pair<int, Subset>> cyc;
      for (Subset s : c) {
        if (color == Color::kWhite && s.contains(meet)) {
          cyc.emplace_back((s - meet).min(), s);
        } else if (color == Color::kBlack && join.contains(s)) {
          cyc.emplace_back((join - s).min(), s);
        }
      }
      if (cyc.size() < 3) continue;
      std::sort(cyc.begin(), cyc.end());
      bool reaches = false;
      for (const auto& [e, s] : cyc) {
        reaches = reaches || side_of(pk, pl, embed_point(s)) == side;
      }
      if (!reaches) continue;
      if (found) internal("two faces of one tiling overlap across an edge");
      const std::size_t r = cyc.size();
      std::size_t pos = 0;
      while (cyc[pos].second != k) ++pos;
      const Subset prev = cyc[(pos + r - 1) % r].second;
      const Subset next = cyc[(pos + 1) % r].second;
      const bool prev_side = side_of(pk, pl, embed_point(prev)) == side;
      const bool next_side = side_of(pk, pl, embed_point(next)) == side;
      if (prev_side == next_side) internal("face is not convex around K");
      found = Apex{prev_side ? prev : next, color};
    }
    return found;
  }

  Collection complete(const Collection& base) const {
    return complete_to_maximal(base, positroid_);
  }

  bool try_edge(const Collection& c1, const Collection& c2,
                const Collection& fixed, const Hole& hole, const Edge& edge,
                std::vector<MutationSquare>& out, std::size_t depth) {
    const Ground& g = positroid_.ground();
    const int n = g.n;
    const int side = hole_side(hole, edge);
    const std::optional<Apex> t1 = apex_on_side(c1, edge, side);
    const std::optional<Apex> t2 = apex_on_side(c2, edge, side);
    if (!t1 || !t2) return false;
    const Subset j1 = t1->vertex;
    const Subset j2 = t2->vertex;
    if (fixed.contains(j1) || fixed.contains(j2)) {
      internal("apex on the hole side is already frozen");
    }

    if (t1->color == t2->color) {
      if (stats_) ++stats_->same_color_steps;
      if (!weakly_separated_unchecked(j1, j2)) {
        internal("same-color apexes " + j1.label(n) + " and " + j2.label(n) +
                 " are not weakly separated");
      }
      Collection bridge_base = fixed;
      bridge_base.insert(j1);
      bridge_base.insert(j2);
      const Collection bridge = complete(bridge_base);
      Collection fixed1 = fixed;
      fixed1.insert(j1);
      Collection fixed2 = fixed;
      fixed2.insert(j2);
      run(c1, bridge, fixed1, out, depth + 1);
      run(bridge, c2, fixed2, out, depth + 1);
      return true;
    }

    if (stats_) ++stats_->crossing_steps;
    const bool first_white = t1->color == Color::kWhite;
    const Subset white_apex = first_white ? j1 : j2;
    const Subset black_apex = first_white ? j2 : j1;
    const Subset k = edge.first;
    const Subset l = edge.second;
    const Subset a_set = (k | l) - black_apex;
    const Subset c_set = white_apex - (k & l);
    if (a_set.size() != 1 || c_set.size() != 1 || !(k & l).contains(a_set)) {
      internal("crossing apexes do not have the expected shape");
    }
    const int a = a_set.min();
    const int b = (k - l).min();
    const int c = c_set.min();
    const int d = (l - k).min();
    const Subset h = (k & l).without(a);
    if (h.with(a).with(c) != white_apex || h.with(b).with(d) != black_apex) {
      internal("crossing apexes do not match Hac and Hbd");
    }
    MutationSquare square;
    if (cyclically_ordered({a, b, c, d}, g)) {
      square = MutationSquare::make(h, a, b, c, d, g);
    } else if (cyclically_ordered({a, d, c, b}, g)) {
      square = MutationSquare::make(h, a, d, c, b, g);
    } else {
      internal("crossing elements a, c and b, d do not interleave");
    }
    const Subset hac = square.removed();
    const Subset hbd = square.added();
    const auto sides = square.sides();
    for (Subset s : {hac, hbd, sides[0], sides[1], sides[2], sides[3]}) {
      if (!positroid_.contains(s)) {
        internal(s.label(n) + " from a crossing step is outside the positroid");
      }
      if (!ws_with_all(s, fixed)) {
        internal(s.label(n) + " from a crossing step is not weakly separated "
                 "from the frozen collection");
      }
    }
    Collection base = fixed;
    base.insert(hac);
    for (Subset s : sides) base.insert(s);
    const Collection with_hac = complete(base);
    const Collection with_hbd = apply_mutation(with_hac, square);
    Collection fixed_ac = fixed;
    fixed_ac.insert(hac);
    Collection fixed_bd = fixed;
    fixed_bd.insert(hbd);
    if (first_white) {
      run(c1, with_hac, fixed_ac, out, depth + 1);
      out.push_back(square);
      run(with_hbd, c2, fixed_bd, out, depth + 1);
    } else {
      run(c1, with_hbd, fixed_bd, out, depth + 1);
      out.push_back(square.reversed());
      run(with_hac, c2, fixed_ac, out, depth + 1);
    }
    return true;
  }

  const Positroid& positroid_;
  PathfinderStats* stats_;
};

bool inside(const Collection& c, const Positroid& positroid) {
  return std::all_of(c.begin(), c.end(),
                     [&](Subset s) { return positroid.contains(s); });
}

}  // namespace

MutationPath find_path(const Collection& from, const Collection& to,
                       const Collection& frozen, const Positroid& positroid,
                       PathfinderStats* stats) {
  const Collection necklace = positroid.necklace().as_collection();
  for (const Collection* c : {&from, &to}) {
    if (!(c->ground() == positroid.ground()) || !c->contains_all(necklace) ||
        !inside(*c, positroid) || !is_ws_collection(*c) ||
        !is_maximal_in(*c, positroid)) {
      throw Error(ErrorCode::kInputsNotMaximal,
                  "endpoints must be maximal weakly separated collections "
                  "inside the positroid");
    }
  }
  if (!from.contains_all(frozen) || !to.contains_all(frozen)) {
    throw Error(ErrorCode::kFrozenNotCommon,
                "frozen collection is not contained in both endpoints");
  }
  MutationPath path;
  path.start = from;
  path.frozen = Collection(positroid.ground(), frozen.members());
  path.necklace = positroid.necklace();
  PathBuilder builder(positroid, stats);
  builder.run(from, to, path.frozen.united(necklace), path.squares, 0);
  return path;
}

PathCheck verify_path(const MutationPath& path, const Positroid& positroid) {
  const int n = positroid.ground().n;
  const Collection fixed =
      path.frozen.united(positroid.necklace().as_collection());
  auto fail = [](std::size_t index, std::string reason) {
    return PathCheck{false, index, std::move(reason)};
  };
  auto check_member = [&](const Collection& c,
                          std::size_t index) -> std::optional<PathCheck> {
    if (!c.contains_all(fixed)) {
      return fail(index, "collection misses a frozen or necklace set");
    }
    if (!inside(c, positroid)) return fail(index, "collection leaves the positroid");
    if (!is_ws_collection(c)) return fail(index, "collection is not weakly separated");
    if (!is_maximal_in(c, positroid)) return fail(index, "collection is not maximal");
    return std::nullopt;
  };
  if (!(path.start.ground() == positroid.ground())) {
    return fail(0, "ground mismatch");
  }
  Collection current = path.start;
  if (auto bad = check_member(current, 0)) return *bad;
  for (std::size_t i = 0; i < path.squares.size(); ++i) {
    const MutationSquare& sq = path.squares[i];
    if (fixed.contains(sq.removed())) {
      return fail(i + 1, "square removes frozen set " + sq.removed().label(n));
    }
    try {
      current = apply_mutation(current, sq);
    } catch (const Error& e) {
      return fail(i + 1, e.what());
    }
    if (auto bad = check_member(current, i + 1)) return *bad;
  }
  return PathCheck{};
}

PathCheck verify_path(const MutationPath& path) {
  return verify_path(path, Positroid(path.necklace));
}

MutationPath bfs_path_oracle(const Collection& from, const Collection& to,
                             const Collection& frozen,
                             const Positroid& positroid) {
  FlipGraphOptions options;
  options.cross_check = false;
  const FlipGraph g = flip_graph(positroid, frozen, options);
  const auto src = g.index_of(from);
  const auto dst = g.index_of(to);
  if (!src || !dst) {
    throw Error(ErrorCode::kEndpointsNotInGraph,
                "endpoints are not maximal collections containing the frozen set");
  }
  std::vector<std::vector<std::pair<std::size_t, MutationSquare>>> adj(
      g.nodes.size());
  for (const FlipGraph::Arc& arc : g.arcs) {
    adj[arc.from].emplace_back(arc.to, arc.square);
    adj[arc.to].emplace_back(arc.from, arc.square.reversed());
  }
  std::vector<std::optional<std::pair<std::size_t, MutationSquare>>> parent(
      g.nodes.size());
  std::vector<char> seen(g.nodes.size());
  std::deque<std::size_t> queue{*src};
  seen[*src] = 1;
  while (!queue.empty() && !seen[*dst]) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [w, sq] : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = std::make_pair(u, sq);
      queue.push_back(w);
    }
  }
  if (!seen[*dst]) {
    throw Error(ErrorCode::kDisconnected,
                "endpoints lie in different components of the frozen flip graph");
  }
  MutationPath path;
  path.start = from;
  path.frozen = Collection(positroid.ground(), frozen.members());
  path.necklace = positroid.necklace();
  for (std::size_t v = *dst; v != *src; v = parent[v]->first) {
    path.squares.push_back(parent[v]->second);
  }
  std::reverse(path.squares.begin(), path.squares.end());
  return path;
}

}  // namespace plabic

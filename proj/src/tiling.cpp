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

#include "plabic/tiling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace plabic {

std::string_view color_name(Color color) {
  return color == Color::kWhite ? "white" : "black";
}

bool Clique::contains(Subset s) const {
  return std::find(members.begin(), members.end(), s) != members.end();
}

bool Clique::consecutive(Subset a, Subset b) const {
  const std::size_t r = members.size();
  if (r < 2) return false;
  for (std::size_t i = 0; i < r; ++i) {
    const Subset x = members[i];
    const Subset y = members[(i + 1) % r];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

namespace {

void require_ws(const Collection& collection) {
  const auto& m = collection.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!weakly_separated_unchecked(m[i], m[j])) {
        const int n = collection.ground().n;
        throw Error(ErrorCode::kNotWeaklySeparated,
                    m[i].label(n) + " and " + m[j].label(n) +
                        " are not weakly separated");
      }
    }
  }
}

std::vector<Clique> collect_cliques(const Collection& collection) {
  const int n = collection.ground().n;
  std::map<std::uint64_t, Clique> white;
  std::map<std::uint64_t, Clique> black;
  for (Subset s : collection) {
    for (int a = 1; a <= n; ++a) {
      if (s.contains(a)) {
        Clique& c = white[s.without(a).bits()];
        c.color = Color::kWhite;
        c.base = s.without(a);
        c.members.push_back(s);
        c.elements.push_back(a);
      } else {
        Clique& c = black[s.with(a).bits()];
        c.color = Color::kBlack;
        c.base = s.with(a);
        c.members.push_back(s);
        c.elements.push_back(a);
      }
    }
  }
  // Members were visited in ascending subset order; reorder by element.
  auto normalize = [](Clique& c) {
    std::vector<std::size_t> order(c.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return c.elements[x] < c.elements[y];
    });
    Clique sorted{c.color, c.base, {}, {}};
    for (std::size_t i : order) {
      sorted.members.push_back(c.members[i]);
      sorted.elements.push_back(c.elements[i]);
    }
    c = std::move(sorted);
  };
  std::vector<Clique> out;
  out.reserve(white.size() + black.size());
  for (auto& [base, c] : white) {
    normalize(c);
    out.push_back(std::move(c));
  }
  for (auto& [base, c] : black) {
    normalize(c);
    out.push_back(std::move(c));
  }
  return out;
}

PlabicTiling build_unchecked(const Collection& collection) {
  PlabicTiling t;
  t.ground = collection.ground();
  t.vertices = collection;
  std::vector<Clique> cliques = collect_cliques(collection);
  std::unordered_map<std::uint64_t, const Clique*> white;
  std::unordered_map<std::uint64_t, const Clique*> black;
  for (const Clique& c : cliques) {
    (c.color == Color::kWhite ? white : black)[c.base.bits()] = &c;
  }
  const int n = collection.ground().n;
  // Every neighboring pair sits in exactly one white clique (its meet).
  for (const Clique& w : cliques) {
    if (w.color != Color::kWhite) continue;
    for (std::size_t i = 0; i < w.members.size(); ++i) {
      for (std::size_t j = i + 1; j < w.members.size(); ++j) {
        const Subset a = w.members[i];
        const Subset b = w.members[j];
        const Clique& bl = *black.at((a | b).bits());
        const bool on_white = w.nontrivial() && w.consecutive(a, b);
        const bool on_black = bl.nontrivial() && bl.consecutive(a, b);
        if (w.nontrivial() && bl.nontrivial() && on_white != on_black) {
          throw Error(ErrorCode::kInternalAssertion,
                      "pair " + a.label(n) + "," + b.label(n) +
                          " lies in two nontrivial cliques but bounds only one");
        }
        const bool bridge = w.members.size() == 2 && bl.members.size() == 2;
        if (on_white || on_black || bridge) t.edges.push_back(Edge::of(a, b));
      }
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  for (Clique& c : cliques) {
    if (c.nontrivial()) t.faces.push_back(std::move(c));
  }
  return t;
}

}  // namespace

std::vector<Clique> cliques_of(const Collection& collection) {
  require_ws(collection);
  return collect_cliques(collection);
}

std::vector<Point> PlabicTiling::face_polygon(const Clique& face) const {
  std::vector<Point> out;
  out.reserve(face.members.size());
  for (Subset s : face.members) out.push_back(coord(s));
  return out;
}

bool PlabicTiling::has_edge(Subset a, Subset b) const {
  return std::binary_search(edges.begin(), edges.end(), Edge::of(a, b));
}

PlabicTiling build_complex(const Collection& collection) {
  require_ws(collection);
  return build_unchecked(collection);
}

PlabicTiling build_complex(const Collection& collection,
                           const GrassmannNecklace& necklace) {
  if (!(necklace.ground() == collection.ground())) {
    throw Error(ErrorCode::kInvalidArgument, "ground mismatch");
  }
  for (Subset s : necklace.entries()) {
    if (!collection.contains(s)) {
      throw Error(ErrorCode::kNotASubset,
                  "necklace entry " + s.label(necklace.ground().n) +
                      " missing from collection");
    }
  }
  PlabicTiling t = build_complex(collection);
  t.necklace = necklace;
  return t;
}

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::kEmbeddingViolation, what);
}

}  // namespace

Embedding embed(const PlabicTiling& tiling) {
  const int n = tiling.ground.n;
  const auto& verts = tiling.vertices.members();
  std::vector<std::pair<Point, Subset>> images;
  images.reserve(verts.size());
  for (Subset s : verts) images.emplace_back(tiling.coord(s), s);
  std::sort(images.begin(), images.end());
  for (std::size_t i = 0; i + 1 < images.size(); ++i) {
    if (images[i].first == images[i + 1].first) {
      violation("vertices " + images[i].second.label(n) + " and " +
                images[i + 1].second.label(n) + " share an image");
    }
  }

  const std::vector<Point> v = vertex_coords(tiling.ground);
  for (const Edge& e : tiling.edges) {
    const Subset only_a = e.first - e.second;
    const Subset only_b = e.second - e.first;
    if (only_a.size() != 1 || only_b.size() != 1 ||
        tiling.coord(e.first) - tiling.coord(e.second) !=
            v[only_a.min()] - v[only_b.min()]) {
      violation("edge " + e.first.label(n) + "-" + e.second.label(n) +
                " is not a translate of some v_i - v_j");
    }
    const Point p = tiling.coord(e.first);
    const Point q = tiling.coord(e.second);
    for (Subset s : verts) {
      if (s == e.first || s == e.second) continue;
      if (on_segment(tiling.coord(s), p, q)) {
        violation("vertex " + s.label(n) + " lies on edge " +
                  e.first.label(n) + "-" + e.second.label(n));
      }
    }
  }
  const auto& edges = tiling.edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      const bool shared = e.first == f.first || e.first == f.second ||
                          e.second == f.first || e.second == f.second;
      // Edges with a common endpoint can only meet elsewhere by overlapping,
      // which the vertex-on-edge test above already rules out.
      if (shared) continue;
      if (segments_touch(tiling.coord(e.first), tiling.coord(e.second),
                         tiling.coord(f.first), tiling.coord(f.second))) {
        violation("edges " + e.first.label(n) + "-" + e.second.label(n) +
                  " and " + f.first.label(n) + "-" + f.second.label(n) +
                  " cross");
      }
    }
  }

  Embedding out;
  std::vector<std::vector<Point>> polygons;
  for (const Clique& face : tiling.faces) {
    std::vector<Point> poly = tiling.face_polygon(face);
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i || j == (i + 1) % m) continue;
        if (orient(poly[i], poly[(i + 1) % m], poly[j]) >= 0) {
          violation(std::string(color_name(face.color)) + " face on " +
                    face.base.label(n) + " is not strictly convex clockwise");
        }
      }
    }
    out.covered_area2 += -signed_area2(poly);
    polygons.push_back(std::move(poly));
  }
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    for (std::size_t j = i + 1; j < polygons.size(); ++j) {
      if (!convex_interiors_disjoint(polygons[i], polygons[j])) {
        violation("faces on " + tiling.faces[i].base.label(n) + " and " +
                  tiling.faces[j].base.label(n) + " overlap");
      }
    }
  }

  if (tiling.necklace) {
    const std::vector<Point> curve = simplify_curve(tiling.necklace->curve());
    for (Subset s : verts) {
      if (point_inside_curve(tiling.coord(s), curve) == Location::kOutside) {
        violation("vertex " + s.label(n) + " lies outside the necklace curve");
      }
    }
    const std::int64_t a = signed_area2(curve);
    out.curve_area2 = a < 0 ? -a : a;
  }
  return out;
}

std::int64_t Triangle::area2() const {
  const std::int64_t a = orient(embed_point(vertices[0]),
                                embed_point(vertices[1]),
                                embed_point(vertices[2]));
  return a < 0 ? -a : a;
}

bool triangle_clockwise_by_elements(const Triangle& t, const Ground& ground) {
  const auto& v = t.vertices;
  std::array<int, 3> elems{};
  if (t.color == Color::kWhite) {
    const Subset common = v[0] & v[1] & v[2];
    if (common.size() != ground.k - 1) {
      throw Error(ErrorCode::kInternalAssertion, "white triangle without a common (k-1)-set");
    }
    for (int i = 0; i < 3; ++i) {
      const Subset d = v[i] - common;
      if (d.size() != 1) {
        throw Error(ErrorCode::kInternalAssertion, "malformed white triangle");
      }
      elems[i] = d.min();
    }
  } else {
    const Subset all = v[0] | v[1] | v[2];
    if (all.size() != ground.k + 1) {
      throw Error(ErrorCode::kInternalAssertion, "black triangle without a common (k+1)-set");
    }
    for (int i = 0; i < 3; ++i) {
      const Subset d = all - v[i];
      if (d.size() != 1) {
        throw Error(ErrorCode::kInternalAssertion, "malformed black triangle");
      }
      elems[i] = d.min();
    }
  }
  return cyclically_ordered(elems, ground);
}

namespace {

// Fan over a convex cyclic vertex list from its least member.
void fan(const std::vector<Subset>& cycle, Color color, int face,
         std::vector<Triangle>& out) {
  const std::size_t r = cycle.size();
  if (r < 3) return;
  const std::size_t p = static_cast<std::size_t>(
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  for (std::size_t i = 1; i + 1 < r; ++i) {
    out.push_back(Triangle{{cycle[p], cycle[(p + i) % r], cycle[(p + i + 1) % r]},
                           color,
                           face});
  }
}

void check_orientation(const Triangle& t, const Ground& ground) {
  const bool clockwise = orient(embed_point(t.vertices[0]),
                                embed_point(t.vertices[1]),
                                embed_point(t.vertices[2])) < 0;
  if (clockwise != triangle_clockwise_by_elements(t, ground)) {
    throw Error(ErrorCode::kInternalAssertion,
                "triangle orientation disagrees with its element order");
  }
}

}  // namespace

std::vector<Triangle> triangulate(const PlabicTiling& tiling) {
  std::vector<Triangle> out;
  for (std::size_t f = 0; f < tiling.faces.size(); ++f) {
    const Clique& face = tiling.faces[f];
    fan(face.members, face.color, static_cast<int>(f), out);
  }
  for (const Triangle& t : out) check_orientation(t, tiling.ground);
  return out;
}

std::int64_t min_triangle_area2(const Ground& ground) {
  const std::vector<Point> v = vertex_coords(ground);
  std::int64_t best = -1;
  for (int a = 1; a <= ground.n; ++a) {
    for (int b = a + 1; b <= ground.n; ++b) {
      for (int c = b + 1; c <= ground.n; ++c) {
        std::int64_t area = orient(v[a], v[b], v[c]);
        if (area < 0) area = -area;
        if (best < 0 || area < best) best = area;
      }
    }
  }
  return best;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool in_common_clique(const Triangle& t, int k) {
  const auto& v = t.vertices;
  return (v[0] & v[1] & v[2]).size() == k - 1 ||
         (v[0] | v[1] | v[2]).size() == k + 1;
}

std::array<Edge, 3> triangle_edges(const Triangle& t) {
  const auto& v = t.vertices;
  return {Edge::of(v[0], v[1]), Edge::of(v[1], v[2]), Edge::of(v[2], v[0])};
}

}  // namespace

std::vector<Hole> find_holes(const Collection& frozen,
                             const Collection& reference,
                             const GrassmannNecklace& necklace) {
  const Ground& ground = reference.ground();
  const int n = ground.n;
  const Collection fixed = frozen.united(necklace.as_collection());
  if (!reference.contains_all(fixed)) {
    throw Error(ErrorCode::kNotASubset,
                "frozen collection (with necklace) is not inside the reference");
  }
  const PlabicTiling ref = build_complex(reference, necklace);
  if (!embed(ref).fills_curve()) {
    throw Error(ErrorCode::kReferenceNotMaximal,
                "reference tiling does not fill the necklace curve");
  }
  const PlabicTiling sub = build_unchecked(fixed);

  // Triangulate each reference face so that the sub-polygon spanned by its
  // frozen members is cut out, then fan the remaining pockets.
  std::vector<Triangle> triangles;
  for (std::size_t f = 0; f < ref.faces.size(); ++f) {
    const Clique& face = ref.faces[f];
    const int fi = static_cast<int>(f);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < face.members.size(); ++i) {
      if (fixed.contains(face.members[i])) kept.push_back(i);
    }
    if (kept.size() < 2) {
      fan(face.members, face.color, fi, triangles);
      continue;
    }
    std::vector<Subset> inner;
    for (std::size_t i : kept) inner.push_back(face.members[i]);
    fan(inner, face.color, fi, triangles);
    const std::size_t r = face.members.size();
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const std::size_t from = kept[j];
      const std::size_t to = kept[(j + 1) % kept.size()];
      std::vector<Subset> pocket{face.members[from]};
      for (std::size_t i = (from + 1) % r; i != to; i = (i + 1) % r) {
        pocket.push_back(face.members[i]);
      }
      pocket.push_back(face.members[to]);
      fan(pocket, face.color, fi, triangles);
    }
  }
  for (const Triangle& t : triangles) check_orientation(t, ground);

  std::vector<char> covered(triangles.size());
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto& v = triangles[i].vertices;
    covered[i] = fixed.contains(v[0]) && fixed.contains(v[1]) &&
                 fixed.contains(v[2]) && in_common_clique(triangles[i], ground.k);
  }

  std::vector<Edge> blocked = sub.edges;
  for (int i = 1; i <= n; ++i) {
    if (necklace.at(i) != necklace.at(i + 1)) {
      blocked.push_back(Edge::of(necklace.at(i), necklace.at(i + 1)));
    }
  }
  std::sort(blocked.begin(), blocked.end());
  auto is_blocked = [&](const Edge& e) {
    return std::binary_search(blocked.begin(), blocked.end(), e);
  };

  std::map<Edge, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    if (covered[i]) continue;
    for (const Edge& e : triangle_edges(triangles[i])) incident[e].push_back(i);
  }
  DisjointSets sets(triangles.size());
  for (const auto& [e, ts] : incident) {
    if (ts.size() > 2) {
      throw Error(ErrorCode::kInternalAssertion, "edge shared by three triangles");
    }
    if (ts.size() == 2 && !is_blocked(e)) sets.unite(ts[0], ts[1]);
  }

  std::map<std::size_t, Hole> by_root;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    if (covered[i]) continue;
    Hole& h = by_root[sets.find(i)];
    h.triangles.push_back(triangles[i]);
    h.area2 += triangles[i].area2();
  }
  std::vector<Hole> holes;
  for (auto& [root, h] : by_root) {
    std::map<Edge, int> count;
    for (const Triangle& t : h.triangles) {
      for (const Edge& e : triangle_edges(t)) ++count[e];
    }
    for (const auto& [e, c] : count) {
      if (c == 1 || is_blocked(e)) {
        if (!fixed.contains(e.first) || !fixed.contains(e.second)) {
          throw Error(ErrorCode::kInternalAssertion,
                      "hole boundary edge " + e.first.label(n) + "-" +
                          e.second.label(n) + " leaves the frozen collection");
        }
        h.boundary_edges.push_back(e);
      }
    }
    holes.push_back(std::move(h));
  }
  std::sort(holes.begin(), holes.end(), [](const Hole& a, const Hole& b) {
    return a.boundary_edges < b.boundary_edges;
  });
  return holes;
}

std::int64_t hole_area2(const std::vector<Hole>& holes) {
  std::int64_t sum = 0;
  for (const Hole& h : holes) sum += h.area2;
  return sum;
}

}  // namespace plabic

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

// The bicolored 2-complex of a weakly separated collection and its planar
// image.
//
// A white clique collects the members containing a fixed (k-1)-set, a black
// clique the members inside a fixed (k+1)-set. Cliques with at least three
// members become faces; their boundary cycles list members by the added
// (white) or removed (black) element in cyclic order. Both colors then embed
// as strictly convex clockwise polygons.

#ifndef PLABIC_TILING_HPP
#define PLABIC_TILING_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "plabic/core.hpp"
#include "plabic/geometry.hpp"
#include "plabic/positroid.hpp"

namespace plabic {

enum class Color { kWhite, kBlack };

std::string_view color_name(Color color);

struct Clique {
  Color color = Color::kWhite;
  // (k-1)-set for white, (k+1)-set for black.
  Subset base;
  // Cyclic order; members[i] is base + elements[i] (white) or
  // base - elements[i] (black), with elements ascending.
  std::vector<Subset> members;
  std::vector<int> elements;

  bool nontrivial() const { return members.size() >= 3; }
  bool contains(Subset s) const;
  // Adjacent in the boundary cycle.
  bool consecutive(Subset a, Subset b) const;
};

struct Edge {
  Subset first;
  Subset second;

  // Orders the endpoints.
  static Edge of(Subset a, Subset b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Throws kNotWeaklySeparated.
std::vector<Clique> cliques_of(const Collection& collection);

struct PlabicTiling {
  Ground ground;
  Collection vertices;
  std::vector<Edge> edges;    // sorted
  std::vector<Clique> faces;  // nontrivial cliques, white first, by base
  // Present when the tiling was built against a necklace.
  std::optional<GrassmannNecklace> necklace;

  Point coord(Subset s) const { return embed_point(s); }
  std::vector<Point> face_polygon(const Clique& face) const;
  bool has_edge(Subset a, Subset b) const;
};

// Standalone complex; no boundary curve.
PlabicTiling build_complex(const Collection& collection);
// Also requires the necklace entries to be members (kNotASubset otherwise).
PlabicTiling build_complex(const Collection& collection,
                           const GrassmannNecklace& necklace);

struct Embedding {
  // Twice the total face area.
  std::int64_t covered_area2 = 0;
  // Twice the area enclosed by the necklace curve, if any.
  std::optional<std::int64_t> curve_area2;

  bool fills_curve() const {
    return curve_area2.has_value() && *curve_area2 == covered_area2;
  }
};

// Verifies injectivity on vertices, non-crossing edges, strictly convex faces
// with disjoint interiors, edge directions v_i - v_j, and containment in the
// necklace curve. Throws kEmbeddingViolation.
Embedding embed(const PlabicTiling& tiling);

struct Triangle {
  std::array<Subset, 3> vertices;
  Color color = Color::kWhite;
  // Index into PlabicTiling::faces, or -1 when not tied to a face.
  int face = -1;

  std::int64_t area2() const;  // unsigned
};

// Fan from each face's least member.
std::vector<Triangle> triangulate(const PlabicTiling& tiling);

// Clockwise iff the defining elements are cyclically ordered. Throws
// kInternalAssertion if the triangle is not of white or black shape.
bool triangle_clockwise_by_elements(const Triangle& t, const Ground& ground);

struct Hole {
  std::vector<Triangle> triangles;
  std::vector<Edge> boundary_edges;  // sorted
  std::int64_t area2 = 0;
};

// Uncovered regions of the image of `frozen` (necklace entries are always
// added to it), computed on a triangulation of the maximal `reference`. Holes
// are ordered by their least boundary edge. Throws kNotASubset,
// kReferenceNotMaximal, kNotWeaklySeparated.
std::vector<Hole> find_holes(const Collection& frozen,
                             const Collection& reference,
                             const GrassmannNecklace& necklace);

// Twice the uncovered area.
std::int64_t hole_area2(const std::vector<Hole>& holes);

// Smallest twice-area of Hull(v_a, v_b, v_c), a < b < c. Every triangle in a
// triangulated tiling has at least this area.
std::int64_t min_triangle_area2(const Ground& ground);

struct SvgOptions {
  double size = 520.0;
  bool labels = true;
  bool draw_curve = true;
};

std::string render_svg(const PlabicTiling& tiling, const SvgOptions& options = {});

}  // namespace plabic

#endif  // PLABIC_TILING_HPP

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

// Exact integer plane geometry for the subset embedding.
//
// Element a of [n] sits at v_a = (a, -a^2). These points are in strictly
// convex position and run clockwise for a = 1..n. A subset I maps to the
// vector sum of its elements' points. With n <= 64 every coordinate is below
// 2^19 in magnitude, so cross products fit comfortably in 64 bits.

#ifndef PLABIC_GEOMETRY_HPP
#define PLABIC_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "plabic/core.hpp"

namespace plabic {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr Point operator+(Point a, Point b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr Point operator-(Point a, Point b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend constexpr bool operator==(Point, Point) = default;
  friend constexpr auto operator<=>(Point, Point) = default;
};

struct FloatPoint {
  double x = 0;
  double y = 0;
};

// Index 0 is unused so that result[a] = v_a.
std::vector<Point> vertex_coords(const Ground& ground);
// Regular n-gon, clockwise on screen (y grows downward), v_1 at the top.
std::vector<FloatPoint> render_coords(const Ground& ground);

Point embed_point(Subset s);
FloatPoint embed_point(Subset s, std::span<const FloatPoint> coords);

// Twice the signed area of (p, q, r); negative means clockwise.
constexpr std::int64_t orient(Point p, Point q, Point r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

// Closed segment membership.
bool on_segment(Point p, Point a, Point b);

// True if the closed segments share any point.
bool segments_touch(Point a, Point b, Point c, Point d);

// Twice the signed area (shoelace).
std::int64_t signed_area2(std::span<const Point> polygon);

enum class Location { kInside, kBoundary, kOutside };

// Exact classification against a closed polygonal curve by winding number.
// Consecutive duplicate vertices are ignored. A curve may touch itself at a
// repeated vertex; points inside any of its loops count as inside. Throws
// kDegenerateCurve on an empty curve.
Location point_inside_curve(Point p, std::span<const Point> curve);

// Drops consecutive repeats (cyclically).
std::vector<Point> simplify_curve(std::span<const Point> curve);

// True if the convex polygons (clockwise, strictly convex) have disjoint
// interiors; touching along edges or at vertices is allowed.
bool convex_interiors_disjoint(std::span<const Point> p,
                               std::span<const Point> q);

}  // namespace plabic

#endif  // PLABIC_GEOMETRY_HPP

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

#include "plabic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace plabic {

std::vector<Point> vertex_coords(const Ground& ground) {
  std::vector<Point> v(ground.n + 1);
  for (int a = 1; a <= ground.n; ++a) {
    v[a] = {a, -static_cast<std::int64_t>(a) * a};
  }
  return v;
}

std::vector<FloatPoint> render_coords(const Ground& ground) {
  std::vector<FloatPoint> v(ground.n + 1);
  for (int a = 1; a <= ground.n; ++a) {
    const double theta = 2.0 * std::numbers::pi * (a - 1) / ground.n;
    v[a] = {std::sin(theta), -std::cos(theta)};
  }
  return v;
}

Point embed_point(Subset s) {
  Point p;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    const std::int64_t a = std::countr_zero(b) + 1;
    p.x += a;
    p.y -= a * a;
  }
  return p;
}

FloatPoint embed_point(Subset s, std::span<const FloatPoint> coords) {
  FloatPoint p;
  for (int a : s.elements()) {
    p.x += coords[a].x;
    p.y += coords[a].y;
  }
  return p;
}

bool on_segment(Point p, Point a, Point b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

bool segments_touch(Point a, Point b, Point c, Point d) {
  const int o1 = sign(orient(a, b, c));
  const int o2 = sign(orient(a, b, d));
  const int o3 = sign(orient(c, d, a));
  const int o4 = sign(orient(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
         on_segment(b, c, d);
}

std::int64_t signed_area2(std::span<const Point> polygon) {
  std::int64_t sum = 0;
  const std::size_t m = polygon.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % m];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum;
}

std::vector<Point> simplify_curve(std::span<const Point> curve) {
  std::vector<Point> out;
  for (const Point& p : curve) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

Location point_inside_curve(Point p, std::span<const Point> curve) {
  const std::vector<Point> poly = simplify_curve(curve);
  const std::size_t m = poly.size();
  if (m == 0) {
    throw Error(ErrorCode::kDegenerateCurve, "empty curve");
  }
  if (m == 1) return p == poly[0] ? Location::kBoundary : Location::kOutside;
  for (std::size_t i = 0; i < m; ++i) {
    if (on_segment(p, poly[i], poly[(i + 1) % m])) return Location::kBoundary;
  }
  // Winding number with half-open upward/downward crossing rules.
  int winding = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % m];
    if (a.y <= p.y) {
      if (b.y > p.y && orient(a, b, p) > 0) ++winding;
    } else {
      if (b.y <= p.y && orient(a, b, p) < 0) --winding;
    }
  }
  return winding != 0 ? Location::kInside : Location::kOutside;
}

bool convex_interiors_disjoint(std::span<const Point> p,
                               std::span<const Point> q) {
  // Separating-axis test restricted to edge normals; exact for convex
  // polygons. Clockwise polygons keep their interior on the right.
  auto separated_by_edges_of = [](std::span<const Point> a,
                                  std::span<const Point> b) {
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point& s = a[i];
      const Point& t = a[(i + 1) % m];
      const bool all_outside = std::all_of(
          b.begin(), b.end(), [&](const Point& x) { return orient(s, t, x) >= 0; });
      if (all_outside) return true;
    }
    return false;
  };
  return separated_by_edges_of(p, q) || separated_by_edges_of(q, p);
}

}  // namespace plabic

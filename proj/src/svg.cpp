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

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "plabic/tiling.hpp"

namespace plabic {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid "-0.00".
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

class Frame {
 public:
  Frame(const std::vector<FloatPoint>& pts, double size) : size_(size) {
    double lo_x = std::numeric_limits<double>::max(), lo_y = lo_x;
    double hi_x = std::numeric_limits<double>::lowest(), hi_y = hi_x;
    for (const FloatPoint& p : pts) {
      lo_x = std::min(lo_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_x = std::max(hi_x, p.x);
      hi_y = std::max(hi_y, p.y);
    }
    if (pts.empty()) lo_x = lo_y = hi_x = hi_y = 0;
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    margin_ = size * 0.08;
    scale_ = (size - 2 * margin_) / span;
    off_x_ = lo_x - ((span - (hi_x - lo_x)) / 2);
    off_y_ = lo_y - ((span - (hi_y - lo_y)) / 2);
  }
  std::string xy(const FloatPoint& p) const {
    return num(x(p)) + "," + num(y(p));
  }
  double x(const FloatPoint& p) const { return margin_ + (p.x - off_x_) * scale_; }
  double y(const FloatPoint& p) const { return margin_ + (p.y - off_y_) * scale_; }

 private:
  double size_;
  double margin_ = 0;
  double scale_ = 1;
  double off_x_ = 0;
  double off_y_ = 0;
};

}  // namespace

std::string render_svg(const PlabicTiling& tiling, const SvgOptions& options) {
  const std::vector<FloatPoint> v = render_coords(tiling.ground);
  auto at = [&](Subset s) { return embed_point(s, v); };

  std::vector<FloatPoint> all;
  for (Subset s : tiling.vertices) all.push_back(at(s));
  if (tiling.necklace) {
    for (Subset s : tiling.necklace->entries()) all.push_back(at(s));
  }
  const Frame frame(all, options.size);
  const int n = tiling.ground.n;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(options.size) << "\" height=\"" << num(options.size)
      << "\" viewBox=\"0 0 " << num(options.size) << " " << num(options.size)
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  out << "<g id=\"faces\" stroke=\"#222222\" stroke-width=\"1.5\">\n";
  for (const Clique& face : tiling.faces) {
    out << "<polygon class=\"" << color_name(face.color) << "\" fill=\""
        << (face.color == Color::kWhite ? "#eeeeee" : "#555555")
        << "\" points=\"";
    for (std::size_t i = 0; i < face.members.size(); ++i) {
      if (i) out << " ";
      out << frame.xy(at(face.members[i]));
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"edges\" stroke=\"#222222\" stroke-width=\"1.5\">\n";
  for (const Edge& e : tiling.edges) {
    const FloatPoint p = at(e.first);
    const FloatPoint q = at(e.second);
    out << "<line x1=\"" << num(frame.x(p)) << "\" y1=\"" << num(frame.y(p))
        << "\" x2=\"" << num(frame.x(q)) << "\" y2=\"" << num(frame.y(q))
        << "\"/>\n";
  }
  out << "</g>\n";

  if (tiling.necklace && options.draw_curve) {
    out << "<polygon id=\"curve\" fill=\"none\" stroke=\"#1f5fbf\" "
           "stroke-width=\"2.5\" stroke-dasharray=\"6,4\" points=\"";
    const auto& entries = tiling.necklace->entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out << " ";
      out << frame.xy(at(entries[i]));
    }
    out << "\"/>\n";
  }

  out << "<g id=\"vertices\" font-family=\"sans-serif\" font-size=\"12\" "
         "text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (Subset s : tiling.vertices) {
    const FloatPoint p = at(s);
    out << "<circle cx=\"" << num(frame.x(p)) << "\" cy=\"" << num(frame.y(p))
        << "\" r=\"13\" fill=\"#ffffff\" stroke=\"#222222\"/>\n";
    if (options.labels) {
      out << "<text x=\"" << num(frame.x(p)) << "\" y=\"" << num(frame.y(p))
          << "\">" << s.label(n) << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace plabic

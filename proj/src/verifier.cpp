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

#include "plabic/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "plabic/mutation.hpp"

namespace plabic {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<Subset>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Subset s : v) h ^= s.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

std::vector<Subset> drop(const Collection& c, std::size_t i) {
  std::vector<Subset> out;
  out.reserve(c.size() - 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != i) out.push_back(c.members()[j]);
  }
  return out;
}

std::string describe(const std::vector<Subset>& v, int n) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].label(n);
  }
  return out + "}";
}

// Number of connected components among `ids` (indices into facets), joining
// facets that share all but one vertex.
std::size_t components(const std::vector<Collection>& facets,
                       const std::vector<std::size_t>& ids) {
  std::vector<std::size_t> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<std::vector<Subset>, std::size_t, KeyHash> owner;
  for (std::size_t t = 0; t < ids.size(); ++t) {
    const Collection& f = facets[ids[t]];
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto [it, inserted] = owner.emplace(drop(f, i), t);
      if (!inserted) {
        const std::size_t a = find(it->second);
        const std::size_t b = find(t);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::size_t count = 0;
  for (std::size_t t = 0; t < ids.size(); ++t) count += find(t) == t;
  return count;
}

}  // namespace

PlabicComplex build_plabic_complex(const Positroid& positroid,
                                   const ComplexOptions& options) {
  FlipGraphOptions fg;
  fg.cross_check = true;
  fg.max_nodes = options.max_facets;
  FlipGraph g = flip_graph(positroid, Collection(positroid.ground()), fg);
  PlabicComplex out;
  out.necklace = positroid.necklace();
  out.vertex_labels = Collection(positroid.ground());
  for (const Collection& f : g.nodes) {
    for (Subset s : f) out.vertex_labels.insert(s);
  }
  out.facets = std::move(g.nodes);
  return out;
}

PropertyCheck check_pure(const PlabicComplex& complex) {
  if (complex.facets.empty()) return {};
  const std::size_t size = complex.facets.front().size();
  const int n = complex.necklace.ground().n;
  for (const Collection& f : complex.facets) {
    if (f.size() != size) {
      return {false, "facet " + describe(f.members(), n) + " has " +
                         std::to_string(f.size()) + " vertices, expected " +
                         std::to_string(size)};
    }
  }
  return {};
}

namespace {

std::pair<PropertyCheck, std::size_t> non_branching_impl(
    const PlabicComplex& complex) {
  std::unordered_map<std::vector<Subset>, std::size_t, KeyHash> count;
  for (const Collection& f : complex.facets) {
    for (std::size_t i = 0; i < f.size(); ++i) ++count[drop(f, i)];
  }
  std::size_t worst = 0;
  const std::vector<Subset>* worst_face = nullptr;
  for (const auto& [face, c] : count) {
    if (c > worst || (c == worst && worst_face && face < *worst_face)) {
      worst = c;
      worst_face = &face;
    }
  }
  PropertyCheck out;
  if (worst > 2) {
    out.ok = false;
    out.witness = "codimension-one face " +
                  describe(*worst_face, complex.necklace.ground().n) +
                  " lies in " + std::to_string(worst) + " facets";
  }
  return {out, worst};
}

}  // namespace

PropertyCheck check_non_branching(const PlabicComplex& complex) {
  return non_branching_impl(complex).first;
}

PropertyCheck check_strongly_connected(const PlabicComplex& complex) {
  std::vector<std::size_t> ids(complex.facets.size());
  std::iota(ids.begin(), ids.end(), 0);
  const std::size_t c = components(complex.facets, ids);
  if (c <= 1) return {};
  return {false, "facet graph has " + std::to_string(c) + " components"};
}

bool check_link_connectivity(const PlabicComplex& complex,
                             const Collection& face) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < complex.facets.size(); ++i) {
    if (complex.facets[i].contains_all(face)) ids.push_back(i);
  }
  if (ids.empty()) {
    throw Error(ErrorCode::kNotAFace, "no facet contains the given collection");
  }
  return components(complex.facets, ids) == 1;
}

std::vector<Collection> faces_up_to(const PlabicComplex& complex,
                                    std::size_t max_size) {
  std::set<std::vector<Subset>> seen;
  for (const Collection& f : complex.facets) {
    const auto& m = f.members();
    std::vector<Subset> current;
    auto walk = [&](auto&& self, std::size_t from) -> void {
      seen.insert(current);
      if (current.size() == max_size) return;
      for (std::size_t i = from; i < m.size(); ++i) {
        current.push_back(m[i]);
        self(self, i + 1);
        current.pop_back();
      }
    };
    walk(walk, 0);
  }
  std::vector<Collection> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.emplace_back(complex.necklace.ground(), v);
  return out;
}

bool VerificationReport::links_ok() const {
  return std::all_of(links_connected.begin(), links_connected.end(),
                     [](const auto& p) { return p.second; });
}

VerificationReport verify_pseudomanifold(const Positroid& positroid,
                                         const LinkOptions& links,
                                         const ComplexOptions& options) {
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point t) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
  };
  VerificationReport report;
  auto t0 = Clock::now();
  const PlabicComplex complex = build_plabic_complex(positroid, options);
  report.timings_ms["build"] = ms_since(t0);
  report.facet_count = complex.facets.size();
  report.vertex_count = complex.vertex_labels.size();

  t0 = Clock::now();
  const PropertyCheck pure = check_pure(complex);
  report.pure = pure.ok;
  report.pure_witness = pure.witness;
  if (report.pure) {
    auto [nb, worst] = non_branching_impl(complex);
    report.non_branching = nb.ok;
    report.non_branching_witness = nb.witness;
    report.worst_codim1_multiplicity = worst;
    const PropertyCheck sc = check_strongly_connected(complex);
    report.strongly_connected = sc.ok;
    report.strongly_connected_witness = sc.witness;
  } else {
    report.non_branching_witness = "skipped: complex is not pure";
    report.strongly_connected_witness = "skipped: complex is not pure";
  }
  report.timings_ms["properties"] = ms_since(t0);

  t0 = Clock::now();
  std::vector<Collection> faces;
  if (links.mode == LinkOptions::Mode::kAll) {
    faces = faces_up_to(complex, links.max_face_size);
    if (faces.size() > links.max_faces) {
      throw Error(ErrorCode::kScaleExceeded,
                  std::to_string(faces.size()) + " faces exceed the cap of " +
                      std::to_string(links.max_faces));
    }
  } else if (links.mode == LinkOptions::Mode::kSample &&
             !complex.facets.empty()) {
    std::mt19937_64 rng(links.seed);
    for (std::size_t i = 0; i < links.samples; ++i) {
      const Collection& f = complex.facets[rng() % complex.facets.size()];
      Collection face(complex.necklace.ground());
      for (Subset s : f) {
        if (face.size() < links.max_face_size && (rng() & 1U)) face.insert(s);
      }
      faces.push_back(std::move(face));
    }
  }
  for (Collection& face : faces) {
    const bool ok = check_link_connectivity(complex, face);
    report.links_connected.emplace_back(std::move(face), ok);
  }
  report.timings_ms["links"] = ms_since(t0);
  return report;
}

}  // namespace plabic

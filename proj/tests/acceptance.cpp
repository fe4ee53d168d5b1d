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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "plabic/mutation.hpp"
#include "plabic/pathfinder.hpp"
#include "plabic/tiling.hpp"
#include "plabic/verifier.hpp"

using namespace plabic;

namespace {

const std::vector<std::pair<int, int>> kUniformCases{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (ok) detail.str("");
    ok = false;
    detail << why;
  }
};

using Family = std::vector<Subset>;

std::set<Family> to_families(const std::vector<Collection>& cs) {
  std::set<Family> out;
  for (const Collection& c : cs) out.insert(c.members());
  return out;
}

// Backtracking over all k-subsets, with no necklace forced in.
const std::set<Family>& backtracked(int n, int k) {
  static std::map<std::pair<int, int>, std::set<Family>> cache;
  auto it = cache.find({n, k});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(n, k), oracle::maximal_families(oracle::k_subsets(n, k), {}, n))
             .first;
  return it->second;
}

void criterion1(Outcome& o) {
  for (auto [n, k] : kUniformCases) {
    const auto& fams = backtracked(n, k);
    const std::size_t want = static_cast<std::size_t>(k * (n - k) + 1);
    for (const Family& f : fams)
      if (f.size() != want) {
        o.fail("(" + std::to_string(n) + "," + std::to_string(k) + ") has a maximal family of size " +
               std::to_string(f.size()));
        return;
      }
    o.detail << "(" << n << "," << k << "): " << fams.size() << " facets of size " << want << "; ";
  }
}

void criterion2(Outcome& o) {
  for (auto [n, k] : kUniformCases) {
    const Ground g = Ground::make(n, k);
    FlipGraphOptions opt;
    opt.cross_check = false;
    const FlipGraph fg = flip_graph(Positroid(uniform_necklace(g)), Collection(g), opt);
    if (to_families(fg.nodes) != backtracked(n, k)) {
      o.fail("(" + std::to_string(n) + "," + std::to_string(k) + "): BFS found " +
             std::to_string(fg.nodes.size()) + " nodes, backtracking " +
             std::to_string(backtracked(n, k).size()));
      return;
    }
    o.detail << "(" << n << "," << k << "): " << fg.nodes.size() << " = " << fg.nodes.size() << "; ";
  }
}

void criterion3(Outcome& o) {
  struct Case {
    int n, k;
    std::size_t max_face;
  };
  for (const Case c : {Case{4, 2, 64}, Case{5, 2, 64}, Case{6, 2, 64}, Case{6, 3, 6}}) {
    const Ground g = Ground::make(c.n, c.k);
    const Positroid p(uniform_necklace(g));
    const PlabicComplex x = build_plabic_complex(p);
    const auto faces = faces_up_to(x, c.max_face);
    std::size_t pairs = 0, squares = 0;
    for (const Collection& b : faces) {
      std::vector<const Collection*> containing;
      for (const Collection& f : x.facets)
        if (f.contains_all(b)) containing.push_back(&f);
      FlipGraphOptions opt;
      opt.cross_check = false;
      const FlipGraph fg = flip_graph(p, b, opt);
      std::set<Family> expected;
      for (const Collection* f : containing) expected.insert(f->members());
      if (to_families(fg.nodes) != expected || !fg.connected()) {
        o.fail("frozen flip graph mismatch or disconnected at a face of size " +
               std::to_string(b.size()));
        return;
      }
      for (const Collection* c1 : containing)
        for (const Collection* c2 : containing) {
          try {
            const MutationPath path = find_path(*c1, *c2, b, p);
            const PathCheck check = verify_path(path, p);
            if (!check.ok || !(path.end() == *c2)) {
              o.fail("verify_path rejected a constructed path: " + check.reason);
              return;
            }
            squares += path.squares.size();
          } catch (const Error& e) {
            o.fail(std::string("find_path failed: ") + e.what());
            return;
          }
          ++pairs;
        }
    }
    o.detail << "(" << c.n << "," << c.k << "): " << faces.size() << " faces, " << pairs
             << " pairs, " << squares << " moves; ";
  }
}

void criterion4(Outcome& o) {
  std::size_t tested = 0;
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k <= std::min(4, n - 2); ++k) {
      const Ground g = Ground::make(n, k);
      const auto js = all_subsets(g);
      for (Subset h : all_subsets(n, k - 2)) {
        const auto rest = (Subset(g.full_mask()) - h).elements();
        for (int a : rest)
          for (int b : rest)
            for (int c : rest)
              for (int d : rest) {
                if (!oracle::cyc({a, b, c, d})) continue;
                for (Subset j : js) {
                  if (!oracle::ws_by_quadruples(h.with(a).with(c), j, n) ||
                      !oracle::ws_by_quadruples(h.with(b).with(d), j, n))
                    continue;
                  ++tested;
                  if (!cross_lemma_conclusion(h, a, b, c, d, j, g)) {
                    o.fail("counterexample at n=" + std::to_string(n) + ", J=" + j.label(n));
                    return;
                  }
                }
              }
      }
    }
  o.detail << tested << " hypothesis-satisfying tuples, all conclusions hold";
}

// Embeds c (standalone and against the heptagon) and compares maximality with
// area. Embedding problems throw.
bool check_embedding(const Collection& c, const Positroid& p, Outcome& o) {
  embed(build_complex(c));
  const Collection with = c.united(p.necklace().as_collection());
  const Embedding e = embed(build_complex(with, p.necklace()));
  const bool maximal = is_maximal_in(with, p);
  if (maximal != e.fills_curve()) {
    o.fail("maximality and area disagree on a collection of size " + std::to_string(with.size()));
    return false;
  }
  return true;
}

void criterion5(Outcome& o) {
  const Ground g = Ground::make(7, 3);
  const Positroid p(uniform_necklace(g));
  std::mt19937_64 rng(20261015);
  std::size_t maximal = 0, partial = 0;
  try {
    if (!check_embedding(oracle::heptagon(), p, o)) return;
    for (int sample = 0; sample < 1000; ++sample) {
      std::vector<Subset> order = all_subsets(g);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Subset> chosen;
      for (Subset s : order) {
        bool ok = true;
        for (Subset t : chosen) ok = ok && oracle::ws_by_quadruples(s, t, 7);
        if (ok) chosen.push_back(s);
      }
      std::uniform_int_distribution<std::size_t> cut(0, chosen.size() - 1);
      const std::vector<Subset> prefix(chosen.begin(),
                                       chosen.begin() + static_cast<std::ptrdiff_t>(cut(rng)));
      if (!check_embedding(Collection(g, chosen), p, o)) return;
      if (!check_embedding(Collection(g, prefix), p, o)) return;
      ++maximal;
      if (!is_maximal_in(Collection(g, prefix).united(p.necklace().as_collection()), p))
        ++partial;
    }
  } catch (const Error& e) {
    o.fail(std::string("embedding failed: ") + e.what());
    return;
  }
  o.detail << "13-vertex example + 1000 random completions and 1000 prefixes (" << partial
           << " non-maximal); injective, convex, disjoint, area matches maximality";
}

void criterion6(Outcome& o) {
  const Collection f1 = oracle::heptagon();
  const Ground& g = f1.ground();
  const Positroid p(uniform_necklace(g));
  if (!is_ws_collection(f1) || !is_maximal_in(f1, p)) {
    o.fail("13-vertex example is not maximal weakly separated");
    return;
  }
  const PlabicTiling t = build_complex(f1, p.necklace());
  const Embedding e = embed(t);
  const auto curve = p.necklace().curve();
  int boundary = 0, interior = 0;
  for (Subset s : t.vertices)
    (point_inside_curve(t.coord(s), curve) == Location::kBoundary ? boundary : interior)++;
  const std::string svg = render_svg(t);
  if (boundary != 7 || interior != 6 || !e.fills_curve() || svg.find("<svg") == std::string::npos) {
    o.fail("tiling has " + std::to_string(boundary) + " boundary and " + std::to_string(interior) +
           " interior vertices");
    return;
  }
  const auto sq = MutationSquare::make(Subset::of({3}), 1, 4, 5, 6, g);
  const auto found = find_mutable(f1);
  if (std::find(found.begin(), found.end(), sq) == found.end()) {
    o.fail("square ({3},(1,4,5,6)) not found");
    return;
  }
  const Collection next = apply_mutation(f1, sq, true);
  if (!next.contains(Subset::of({3, 4, 6})) || next.contains(Subset::of({1, 3, 5})) ||
      !is_maximal_in(next, p)) {
    o.fail("mutation result is wrong or not maximal");
    return;
  }
  o.detail << "13 labels, 7 boundary + 6 interior vertices, " << t.faces.size()
           << " faces; 135 -> 346 gives a maximal collection";
}

void criterion7(Outcome& o) {
  auto check = [&](const GrassmannNecklace& nk) {
    const VerificationReport r = verify_pseudomanifold(Positroid(nk));
    if (!r.ok()) {
      o.fail("failed: " + r.pure_witness + r.non_branching_witness + r.strongly_connected_witness);
      return false;
    }
    return true;
  };
  for (auto [n, k] : kUniformCases) {
    const auto nk = uniform_necklace(Ground::make(n, k));
    if (!check(nk)) return;
    o.detail << "(" << n << "," << k << ") ok; ";
  }
  std::size_t count = 0;
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& nk : enumerate_necklaces(Ground::make(n, k))) {
        if (!check(nk)) return;
        ++count;
      }
  o.detail << count << " positroids with n <= 5 ok";
}

void criterion8(Outcome& o) {
  for (int n = 4; n <= 7; ++n) {
    const Ground g = Ground::make(n, 2);
    const FlipGraph fg = flip_graph(Positroid(uniform_necklace(g)), Collection(g));
    const auto tris = oracle::triangulations(n);
    if (fg.nodes.size() != oracle::catalan(n - 2) || tris.size() != fg.nodes.size()) {
      o.fail("n=" + std::to_string(n) + ": " + std::to_string(fg.nodes.size()) + " facets");
      return;
    }
    // Facet -> its non-boundary pairs, read as polygon diagonals.
    using Tri = std::vector<std::pair<int, int>>;
    std::vector<Tri> image;
    for (const Collection& c : fg.nodes) {
      Tri t;
      for (Subset s : c) {
        const auto e = s.elements();
        if (e[1] - e[0] != 1 && !(e[0] == 1 && e[1] == n)) t.emplace_back(e[0], e[1]);
      }
      std::sort(t.begin(), t.end());
      image.push_back(t);
    }
    if (std::set<Tri>(image.begin(), image.end()) != tris) {
      o.fail("n=" + std::to_string(n) + ": facets do not map onto triangulations");
      return;
    }
    std::set<std::pair<Tri, Tri>> flips, arcs;
    for (const Tri& a : tris)
      for (const Tri& b : tris) {
        Tri common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (a < b && common.size() + 1 == a.size()) flips.insert({a, b});
      }
    for (const auto& arc : fg.arcs) {
      const Tri& a = image[arc.from];
      const Tri& b = image[arc.to];
      arcs.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }
    if (flips != arcs || arcs.size() != fg.arcs.size()) {
      o.fail("n=" + std::to_string(n) + ": arcs do not match diagonal flips");
      return;
    }
    o.detail << "n=" << n << ": " << fg.nodes.size() << " facets, " << arcs.size() << " flips; ";
  }
}

void criterion9(Outcome& o) {
  std::size_t tested = 0, pinched = 0;
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& nk : enumerate_necklaces(Ground::make(n, k)))
        for (Subset j : oracle::k_subsets(n, k)) {
          bool compatible = true;
          for (Subset e : nk.entries()) compatible = compatible && oracle::ws_by_quadruples(j, e, n);
          if (!compatible) continue;
          bool gale = true;
          for (int i = 1; i <= n; ++i) gale = gale && oracle::gale(nk.at(i), j, i, n);
          ++tested;
          if (nk.has_repeats()) ++pinched;
          if (geometric_membership_check(nk, j) != gale) {
            o.fail("disagreement at J=" + j.label(n));
            return;
          }
        }
  o.detail << tested << " (necklace, J) pairs agree, " << pinched << " on self-touching curves";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"cardinality k(n-k)+1", criterion1},
      {"flip graph equals backtracking", criterion2},
      {"frozen connectivity and find_path", criterion3},
      {"cross lemma", criterion4},
      {"embedding (7,3)", criterion5},
      {"13-vertex heptagon tiling", criterion6},
      {"pseudomanifold", criterion7},
      {"k=2 triangulation bijection", criterion8},
      {"geometric positroid membership", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, o.ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), secs, o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

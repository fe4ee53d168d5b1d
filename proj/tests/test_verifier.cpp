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


#include <iterator>
#include <vector>

#include "doctest.h"
#include "plabic/mutation.hpp"
#include "plabic/verifier.hpp"

using namespace plabic;

TEST_CASE("small complexes") {
  const Ground g4 = Ground::make(4, 2);
  const PlabicComplex x4 = build_plabic_complex(Positroid(uniform_necklace(g4)));
  CHECK(x4.facets.size() == 2);
  for (const auto& f : x4.facets) CHECK(f.size() == 5);
  CHECK(x4.vertex_labels.size() == 6);
  CHECK(check_pure(x4).ok);
  CHECK(check_non_branching(x4).ok);
  CHECK(check_strongly_connected(x4).ok);

  const PlabicComplex x5 = build_plabic_complex(Positroid(uniform_necklace(Ground::make(5, 2))));
  CHECK(x5.facets.size() == 5);
  for (const auto& f : x5.facets) CHECK(f.size() == 7);
  CHECK(check_link_connectivity(x5, Collection(x5.vertex_labels.ground())));
  CHECK(check_link_connectivity(x5, x5.facets[0]));
}

TEST_CASE("property checks catch broken complexes") {
  const Ground g = Ground::make(5, 2);
  PlabicComplex x = build_plabic_complex(Positroid(uniform_necklace(g)));

  PlabicComplex impure = x;
  Collection shrunk = impure.facets[0];
  shrunk.erase(*std::prev(shrunk.end()));
  impure.facets[0] = shrunk;
  const PropertyCheck pure = check_pure(impure);
  CHECK_FALSE(pure.ok);
  CHECK_FALSE(pure.witness.empty());

  // Three facets through one codimension-one face.
  PlabicComplex branching;
  branching.vertex_labels = Collection(g, all_subsets(g));
  const std::vector<Subset> core{Subset::of({1, 2}), Subset::of({2, 3})};
  for (Subset extra : {Subset::of({3, 4}), Subset::of({4, 5}), Subset::of({1, 5})}) {
    auto m = core;
    m.push_back(extra);
    branching.facets.emplace_back(g, m);
  }
  CHECK_FALSE(check_non_branching(branching).ok);

  // Two facets sharing nothing of codimension one.
  PlabicComplex split;
  split.facets = {Collection(g, {Subset::of({1, 2}), Subset::of({2, 3})}),
                  Collection(g, {Subset::of({3, 4}), Subset::of({4, 5})})};
  CHECK_FALSE(check_strongly_connected(split).ok);
  CHECK_THROWS_AS(check_link_connectivity(split, Collection(g, {Subset::of({1, 3})})), Error);
  CHECK_FALSE(check_link_connectivity(split, Collection(g)));
}

TEST_CASE("faces") {
  const PlabicComplex x = build_plabic_complex(Positroid(uniform_necklace(Ground::make(5, 2))));
  const auto faces = faces_up_to(x, 1);
  // The empty face plus one per vertex.
  CHECK(faces.size() == 1 + x.vertex_labels.size());
  const auto all = faces_up_to(x, 64);
  for (const auto& f : all) CHECK(check_link_connectivity(x, f));
}

TEST_CASE("pseudomanifold reports") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
    LinkOptions links;
    links.mode = LinkOptions::Mode::kAll;
    const VerificationReport r =
        verify_pseudomanifold(Positroid(uniform_necklace(Ground::make(n, k))), links);
    CHECK(r.ok());
    CHECK(r.worst_codim1_multiplicity <= 2);
    CHECK_FALSE(r.links_connected.empty());
  }
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& nk : enumerate_necklaces(Ground::make(n, k))) {
        LinkOptions links;
        links.mode = LinkOptions::Mode::kAll;
        REQUIRE(verify_pseudomanifold(Positroid(nk), links).ok());
      }

  LinkOptions sample;
  sample.mode = LinkOptions::Mode::kSample;
  sample.samples = 25;
  sample.seed = 7;
  const Positroid p(uniform_necklace(Ground::make(6, 3)));
  const VerificationReport a = verify_pseudomanifold(p, sample);
  const VerificationReport b = verify_pseudomanifold(p, sample);
  CHECK(a.links_connected.size() == 25);
  CHECK(a.links_connected == b.links_connected);
  CHECK(a.ok());

  ComplexOptions tiny;
  tiny.max_facets = 10;
  try {
    build_plabic_complex(p, tiny);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kScaleExceeded);
  }
}

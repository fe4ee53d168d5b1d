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

#ifndef PLABIC_VERIFIER_HPP
#define PLABIC_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plabic/core.hpp"
#include "plabic/positroid.hpp"

namespace plabic {

// Simplicial complex on k-subsets whose facets are the maximal weakly
// separated collections of a positroid.
struct PlabicComplex {
  Collection vertex_labels;
  std::vector<Collection> facets;  // canonical order
  GrassmannNecklace necklace;
};

struct ComplexOptions {
  std::size_t max_facets = 500'000;
};

// Facets from the mutation graph, checked against clique enumeration (a
// mismatch throws kDisconnected). Throws kScaleExceeded past the cap.
PlabicComplex build_plabic_complex(const Positroid& positroid,
                                   const ComplexOptions& options = {});

struct PropertyCheck {
  bool ok = true;
  std::string witness;  // empty when ok
};

PropertyCheck check_pure(const PlabicComplex& complex);
// Every facet-minus-one-vertex lies in at most two facets.
PropertyCheck check_non_branching(const PlabicComplex& complex);
// Facets connected through shared codimension-one faces.
PropertyCheck check_strongly_connected(const PlabicComplex& complex);

// The facets containing `face` are connected through shared codimension-one
// faces. Throws kNotAFace if no facet contains it.
bool check_link_connectivity(const PlabicComplex& complex,
                             const Collection& face);

// Every face (subset of some facet) with at most `max_size` vertices.
std::vector<Collection> faces_up_to(const PlabicComplex& complex,
                                    std::size_t max_size);

struct LinkOptions {
  enum class Mode { kNone, kAll, kSample } mode = Mode::kNone;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t max_face_size = 64;
  std::size_t max_faces = 200'000;
};

struct VerificationReport {
  std::size_t facet_count = 0;
  std::size_t vertex_count = 0;
  bool pure = false;
  std::string pure_witness;
  bool non_branching = false;
  std::string non_branching_witness;
  std::size_t worst_codim1_multiplicity = 0;
  bool strongly_connected = false;
  std::string strongly_connected_witness;
  std::vector<std::pair<Collection, bool>> links_connected;
  std::map<std::string, double> timings_ms;

  bool links_ok() const;
  bool ok() const { return pure && non_branching && strongly_connected && links_ok(); }
};

VerificationReport verify_pseudomanifold(const Positroid& positroid,
                                         const LinkOptions& links = {},
                                         const ComplexOptions& options = {});

}  // namespace plabic

#endif  // PLABIC_VERIFIER_HPP

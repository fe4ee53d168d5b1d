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

// JSON forms. Elements are 1-based everywhere.
//
//   subset      [1, 3, 5]
//   collection  [[1, 2, 3], [1, 3, 5], ...]       (ascending bit order)
//   necklace    [[1, 2, 3], [2, 3, 4], ...]       (n entries, I_1 first)
//   square      {"S": [3], "abcd": [1, 4, 5, 6]}
//   path        {"n", "k", "necklace", "frozen", "start", "squares", "end"}
//   flip graph  {"n", "k", "frozen", "nodes", "arcs": [{"from", "to", "square"}]}

#ifndef PLABIC_JSON_IO_HPP
#define PLABIC_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "plabic/core.hpp"
#include "plabic/mutation.hpp"
#include "plabic/pathfinder.hpp"
#include "plabic/positroid.hpp"
#include "plabic/tiling.hpp"
#include "plabic/verifier.hpp"

namespace plabic {

using Json = nlohmann::json;

Json to_json(Subset s);
Json to_json(const Collection& c);
Json to_json(const GrassmannNecklace& necklace);
Json to_json(const MutationSquare& square);
Json to_json(const MutationPath& path);
Json to_json(const FlipGraph& graph);
Json to_json(const PlabicTiling& tiling);
Json to_json(const VerificationReport& report);

// All parsers throw kInvalidArgument on malformed input. `size` of -1 accepts
// any subset size.
Subset subset_from_json(const Json& j, const Ground& ground, int size);
Collection collection_from_json(const Json& j, const Ground& ground);
GrassmannNecklace necklace_from_json(const Json& j);
MutationSquare square_from_json(const Json& j, const Ground& ground);
MutationPath path_from_json(const Json& j);
FlipGraph flip_graph_from_json(const Json& j);

// Reads and parses a file; kInvalidArgument if missing or not JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace plabic

#endif  // PLABIC_JSON_IO_HPP

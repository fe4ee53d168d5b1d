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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"
#include "oracles.hpp"
#include "plabic/cli.hpp"
#include "plabic/json_io.hpp"

using namespace plabic;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("plabic_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const fs::path p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("usage and exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"ws", "check", "--bogus"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const Result ws = run({"ws", "check", "--pair", "[[1,3],[2,4]]", "--n", "4"});
  CHECK(ws.code == kExitOk);
  CHECK(Json::parse(ws.out)["weakly_separated"] == false);

  const Result bad = run({"ws", "check", "--pair", "[[1,3],[2]]", "--n", "4"});
  CHECK(bad.code == kExitDomain);
  const Json err = Json::parse(bad.err);
  CHECK(err["error"] == "invalid-argument");
  CHECK(err.contains("message"));

  const Result range = run({"ws", "check", "--pair", "[[1,9],[2,3]]", "--n", "4"});
  CHECK(range.code == kExitDomain);
}

TEST_CASE("collections, necklaces and positroids") {
  TempDir tmp;
  const std::string f1 = tmp.file("f1.json", to_json(oracle::heptagon()).dump());
  const std::string nk = tmp.file("nk.json", to_json(uniform_necklace(Ground::make(7, 3))).dump());
  const Result r = run({"ws", "check", "--collection", f1, "--n", "7", "--necklace", nk});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["weakly_separated"] == true);
  CHECK(j["maximal"] == true);

  const std::string bad_nk = tmp.file("bad.json", "[[1,2],[3,4],[1,2],[3,4]]");
  const Result b = run({"positroid", "members", "--necklace", bad_nk});
  CHECK(b.code == kExitDomain);
  CHECK(Json::parse(b.err)["error"] == "necklace-invalid");

  const Result m = run({"positroid", "members", "--necklace", nk});
  CHECK(m.code == kExitOk);
  CHECK(Json::parse(m.out).size() == 35);

  CHECK(run({"positroid", "members", "--necklace", tmp.file("missing.json")}).code ==
        kExitDomain);
}

TEST_CASE("render and tiling build") {
  TempDir tmp;
  const std::string f1 = tmp.file("f1.json", to_json(oracle::heptagon()).dump());
  const std::string svg1 = tmp.file("a.svg"), svg2 = tmp.file("b.svg");
  REQUIRE(run({"render", "--collection", f1, "--n", "7", "--k", "3", "--svg", svg1}).code ==
          kExitOk);
  REQUIRE(run({"render", "--collection", f1, "--n", "7", "--svg", svg2}).code == kExitOk);
  CHECK(slurp(svg1) == slurp(svg2));
  CHECK(slurp(svg1).find(">135<") != std::string::npos);

  const Result t = run({"tiling", "build", "--collection", f1, "--n", "7"});
  CHECK(t.code == kExitOk);
  const Json tj = Json::parse(t.out);
  CHECK(tj["vertices"].size() == 13);
  CHECK(tj["fills_curve"] == true);

  const std::string crossing = tmp.file("x.json", "[[1,3],[2,4]]");
  const Result bad = run({"render", "--collection", crossing, "--n", "4", "--svg", svg1});
  CHECK(bad.code == kExitDomain);
  CHECK(Json::parse(bad.err)["error"] == "not-weakly-separated");
}

TEST_CASE("mutations") {
  TempDir tmp;
  const std::string f1 = tmp.file("f1.json", to_json(oracle::heptagon()).dump());
  const Result list = run({"mutate", "list", "--collection", f1, "--n", "7"});
  CHECK(list.code == kExitOk);
  bool found = false;
  for (const Json& sq : Json::parse(list.out))
    found = found || (sq["S"] == Json::array({3}) && sq["abcd"] == Json::array({1, 4, 5, 6}));
  CHECK(found);

  const Result apply = run({"mutate", "apply", "--collection", f1, "--n", "7", "--square",
                            R"({"S":[3],"abcd":[1,4,5,6]})"});
  CHECK(apply.code == kExitOk);
  const Collection after = collection_from_json(Json::parse(apply.out), Ground::make(7, 3));
  CHECK(after.contains(Subset::of({3, 4, 6})));
  CHECK_FALSE(after.contains(Subset::of({1, 3, 5})));

  const Result bad = run({"mutate", "apply", "--collection", f1, "--n", "7", "--square",
                          R"({"S":[3],"abcd":[2,4,5,6]})"});
  CHECK(bad.code == kExitDomain);
  CHECK(Json::parse(bad.err)["error"] == "square-not-applicable");
}

TEST_CASE("flip graph and path round trips") {
  TempDir tmp;
  const Ground g = Ground::make(6, 3);
  const Positroid p(uniform_necklace(g));
  const std::string nk = tmp.file("nk.json", to_json(p.necklace()).dump());
  const std::string graph = tmp.file("g.json");
  REQUIRE(run({"flipgraph", "--necklace", nk, "--out", graph}).code == kExitOk);
  const Json gj = read_json_file(graph);
  const FlipGraph fg = flip_graph_from_json(gj);
  CHECK(fg.nodes.size() == 34);
  CHECK(to_json(fg) == gj);

  const std::string from = tmp.file("from.json", to_json(fg.nodes.front()).dump());
  const std::string to = tmp.file("to.json", to_json(fg.nodes.back()).dump());
  const std::string path = tmp.file("p.json"), path2 = tmp.file("p2.json");
  REQUIRE(run({"path", "find", "--necklace", nk, "--from", from, "--to", to, "--out", path})
              .code == kExitOk);
  REQUIRE(run({"path", "find", "--necklace", nk, "--from", from, "--to", to, "--out", path2})
              .code == kExitOk);
  CHECK(slurp(path) == slurp(path2));
  const Json pj = read_json_file(path);
  CHECK(to_json(path_from_json(pj)) == pj);

  const Result ok = run({"path", "verify", "--path", path});
  CHECK(ok.code == kExitOk);
  CHECK(Json::parse(ok.out)["valid"] == true);

  // Freeze the set the first square removes: the replay must fail.
  Json tampered = pj;
  REQUIRE_FALSE(tampered["squares"].empty());
  const MutationSquare first = square_from_json(tampered["squares"][0], g);
  tampered["frozen"] = Json::array({to_json(first.removed())});
  const std::string bad = tmp.file("bad.json", tampered.dump());
  const Result rejected = run({"path", "verify", "--path", bad});
  CHECK(rejected.code == kExitOk);
  const Json rj = Json::parse(rejected.out);
  CHECK(rj["valid"] == false);
  CHECK(rj["violation_index"] == 1);

  const std::string frozen = tmp.file("b.json", "[[1,3,5]]");
  const Result not_common = run({"path", "find", "--necklace", nk, "--frozen", frozen,
                                 "--from", from, "--to", to});
  if (!(fg.nodes.front().contains(Subset::of({1, 3, 5})) &&
        fg.nodes.back().contains(Subset::of({1, 3, 5}))))
    CHECK(not_common.code == kExitDomain);
}

TEST_CASE("pseudomanifold report") {
  TempDir tmp;
  const std::string nk =
      tmp.file("nk.json", to_json(uniform_necklace(Ground::make(6, 2))).dump());
  const std::string r1 = tmp.file("r1.json"), r2 = tmp.file("r2.json");
  REQUIRE(run({"verify", "pseudomanifold", "--necklace", nk, "--links", "sample:20", "--seed",
               "3", "--report", r1})
              .code == kExitOk);
  REQUIRE(run({"verify", "pseudomanifold", "--necklace", nk, "--links", "sample:20", "--seed",
               "3", "--report", r2})
              .code == kExitOk);
  CHECK(slurp(r1) == slurp(r2));
  const Json j = read_json_file(r1);
  CHECK(j["facets"] == 14);
  CHECK(j["pseudomanifold"] == true);
  CHECK(run({"verify", "pseudomanifold", "--necklace", nk, "--links", "some"}).code ==
        kExitDomain);
}

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

#include "plabic/cli.hpp"

#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "plabic/json_io.hpp"

namespace plabic {

namespace {

struct Options {
  std::string pair;
  std::string collection;
  std::string necklace;
  std::string frozen;
  std::string from;
  std::string to;
  std::string path;
  std::string square;
  std::string out;
  std::string svg;
  std::string report;
  std::string links = "none";
  std::uint64_t seed = 0;
  std::size_t max_face_size = 64;
  std::size_t max_faces = 200'000;
  std::size_t max_facets = 500'000;
  int n = 0;
  int k = 0;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(const Json& j, const std::string& file) {
    const std::string text = j.dump(2) + "\n";
    if (file.empty()) {
      out_ << text;
    } else {
      write_text_file(file, text);
    }
  }

  std::optional<GrassmannNecklace> necklace() const {
    if (o_.necklace.empty()) return std::nullopt;
    return necklace_from_json(read_json_file(o_.necklace));
  }

  // Ground from the necklace, or from --n/--k (k may come from `sample`).
  Ground ground(const Json* sample = nullptr) const {
    if (auto nk = necklace()) return nk->ground();
    if (o_.n == 0) {
      throw Error(ErrorCode::kInvalidArgument, "--n or --necklace is required");
    }
    int k = o_.k;
    if (k == 0 && sample && sample->is_array() && !sample->empty() &&
        sample->front().is_array()) {
      k = static_cast<int>(sample->front().size());
    }
    if (k == 0) throw Error(ErrorCode::kInvalidArgument, "--k is required");
    return Ground::make(o_.n, k);
  }

  Collection load_collection(const std::string& file, const Ground& g) const {
    return collection_from_json(read_json_file(file), g);
  }

  Collection load_frozen(const Ground& g) const {
    if (o_.frozen.empty()) return Collection(g);
    return load_collection(o_.frozen, g);
  }

  int ws_check() {
    if (!o_.pair.empty()) {
      const Json pair = Json::parse(o_.pair);
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::kInvalidArgument, "--pair needs two subsets");
      }
      const Ground g = ground(&pair);
      const Subset a = subset_from_json(pair[0], g, g.k);
      const Subset b = subset_from_json(pair[1], g, g.k);
      emit(Json{{"pair", pair}, {"weakly_separated", weakly_separated(a, b, g)}},
           o_.out);
      return kExitOk;
    }
    if (o_.collection.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--pair or --collection is required");
    }
    const Json raw = read_json_file(o_.collection);
    const Ground g = ground(&raw);
    const Collection c = collection_from_json(raw, g);
    Json offending = Json::array();
    const auto& m = c.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!weakly_separated_unchecked(m[i], m[j])) {
          offending.push_back(Json::array({to_json(m[i]), to_json(m[j])}));
        }
      }
    }
    Json result{{"size", c.size()},
                {"weakly_separated", offending.empty()},
                {"offending_pairs", offending}};
    if (auto nk = necklace()) {
      const Positroid p(*nk);
      result["maximal"] = offending.empty() && c.contains_all(nk->as_collection()) &&
                          is_maximal_in(c, p);
    }
    emit(result, o_.out);
    return kExitOk;
  }

  int positroid_members_cmd() {
    const auto nk = necklace();
    if (!nk) throw Error(ErrorCode::kInvalidArgument, "--necklace is required");
    emit(to_json(positroid_members(*nk)), o_.out);
    return kExitOk;
  }

  int tiling_build(bool render_only) {
    const Json raw = read_json_file(o_.collection);
    const Ground g = ground(&raw);
    const Collection c = collection_from_json(raw, g);
    std::optional<GrassmannNecklace> nk = necklace();
    if (!nk) {
      GrassmannNecklace uniform = uniform_necklace(g);
      if (c.contains_all(uniform.as_collection())) nk = uniform;
    }
    const PlabicTiling t = nk ? build_complex(c, *nk) : build_complex(c);
    const Embedding e = embed(t);
    if (!o_.svg.empty()) write_text_file(o_.svg, render_svg(t));
    if (render_only && o_.out.empty()) return kExitOk;
    Json j = to_json(t);
    j["covered_area2"] = e.covered_area2;
    if (e.curve_area2) {
      j["curve_area2"] = *e.curve_area2;
      j["fills_curve"] = e.fills_curve();
    }
    emit(j, o_.out);
    return kExitOk;
  }

  int mutate_list() {
    const Json raw = read_json_file(o_.collection);
    const Ground g = ground(&raw);
    const Collection c = collection_from_json(raw, g);
    const auto nk = necklace();
    std::optional<Positroid> p;
    if (nk) p.emplace(*nk);
    Json squares = Json::array();
    for (const MutationSquare& sq : find_mutable(c)) {
      if (p && (!p->contains(sq.added()) ||
                nk->as_collection().contains(sq.removed()))) {
        continue;
      }
      Json j = to_json(sq);
      j["removes"] = to_json(sq.removed());
      j["adds"] = to_json(sq.added());
      squares.push_back(j);
    }
    emit(squares, o_.out);
    return kExitOk;
  }

  int mutate_apply() {
    const Json raw = read_json_file(o_.collection);
    const Ground g = ground(&raw);
    const Collection c = collection_from_json(raw, g);
    const MutationSquare sq = square_from_json(Json::parse(o_.square), g);
    emit(to_json(apply_mutation(c, sq, /*verify=*/true)), o_.out);
    return kExitOk;
  }

  int flipgraph() {
    const auto nk = necklace();
    if (!nk) throw Error(ErrorCode::kInvalidArgument, "--necklace is required");
    const Positroid p(*nk);
    FlipGraphOptions options;
    options.max_nodes = o_.max_facets;
    emit(to_json(flip_graph(p, load_frozen(p.ground()), options)), o_.out);
    return kExitOk;
  }

  int path_find() {
    const auto nk = necklace();
    if (!nk) throw Error(ErrorCode::kInvalidArgument, "--necklace is required");
    const Positroid p(*nk);
    const Ground& g = p.ground();
    const MutationPath path =
        find_path(load_collection(o_.from, g), load_collection(o_.to, g),
                  load_frozen(g), p);
    emit(to_json(path), o_.out);
    return kExitOk;
  }

  int path_verify() {
    const Json raw = read_json_file(o_.path);
    const MutationPath path = path_from_json(raw);
    const PathCheck check = verify_path(path);
    Json result{{"valid", check.ok}, {"length", path.squares.size()}};
    if (check.ok && raw.contains("end")) {
      const Collection expected =
          collection_from_json(raw.at("end"), path.necklace.ground());
      if (!(path.end() == expected)) {
        result["valid"] = false;
        result["reason"] = "replayed path does not reach the recorded end";
      }
    }
    if (!check.ok) {
      result["violation_index"] = *check.violation_index;
      result["reason"] = check.reason;
    }
    emit(result, o_.out);
    return kExitOk;
  }

  int verify_pm() {
    const auto nk = necklace();
    if (!nk) throw Error(ErrorCode::kInvalidArgument, "--necklace is required");
    LinkOptions links;
    links.seed = o_.seed;
    links.max_face_size = o_.max_face_size;
    links.max_faces = o_.max_faces;
    if (o_.links == "all") {
      links.mode = LinkOptions::Mode::kAll;
    } else if (o_.links.rfind("sample:", 0) == 0) {
      links.mode = LinkOptions::Mode::kSample;
      links.samples = std::stoul(o_.links.substr(7));
    } else if (o_.links != "none") {
      throw Error(ErrorCode::kInvalidArgument,
                  "--links must be none, all or sample:N");
    }
    ComplexOptions options;
    options.max_facets = o_.max_facets;
    VerificationReport report = verify_pseudomanifold(Positroid(*nk), links, options);
    Json j = to_json(report);
    // Timings vary run to run; keep the report file byte-stable.
    j.erase("timings_ms");
    emit(j, o_.report);
    return report.ok() ? kExitOk : kExitTheorem;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Weakly separated collections, plabic tilings and mutation paths",
               "plabic"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  Runner runner(o, out);

  auto add_ground = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "ground set size");
    cmd->add_option("--k", o.k, "subset size (default: from input)");
  };

  CLI::App* ws = app.add_subcommand("ws", "weak separation checks");
  ws->require_subcommand(1);
  CLI::App* ws_check = ws->add_subcommand("check", "check a pair or a collection");
  ws_check->add_option("--pair", o.pair, "JSON pair, e.g. '[[1,3],[2,4]]'");
  ws_check->add_option("--collection", o.collection, "collection JSON file");
  ws_check->add_option("--necklace", o.necklace, "also report maximality inside this positroid");
  ws_check->add_option("--out", o.out);
  add_ground(ws_check);
  ws_check->callback([&] { action = [&] { return runner.ws_check(); }; });

  CLI::App* pos = app.add_subcommand("positroid", "positroid queries");
  pos->require_subcommand(1);
  CLI::App* members = pos->add_subcommand("members", "list positroid members");
  members->add_option("--necklace", o.necklace)->required();
  members->add_option("--out", o.out);
  members->callback([&] { action = [&] { return runner.positroid_members_cmd(); }; });

  CLI::App* tiling = app.add_subcommand("tiling", "plabic tilings");
  tiling->require_subcommand(1);
  CLI::App* build = tiling->add_subcommand("build", "build and embed a tiling");
  build->add_option("--collection", o.collection)->required();
  build->add_option("--necklace", o.necklace);
  build->add_option("--svg", o.svg);
  build->add_option("--out", o.out);
  add_ground(build);
  build->callback([&] { action = [&] { return runner.tiling_build(false); }; });

  CLI::App* render = app.add_subcommand("render", "render a tiling as SVG");
  render->add_option("--collection", o.collection)->required();
  render->add_option("--necklace", o.necklace);
  render->add_option("--svg", o.svg)->required();
  render->add_option("--out", o.out);
  add_ground(render);
  render->callback([&] { action = [&] { return runner.tiling_build(true); }; });

  CLI::App* mutate = app.add_subcommand("mutate", "square moves");
  mutate->require_subcommand(1);
  CLI::App* list = mutate->add_subcommand("list", "list applicable squares");
  list->add_option("--collection", o.collection)->required();
  list->add_option("--necklace", o.necklace, "keep only moves legal in this positroid");
  list->add_option("--out", o.out);
  add_ground(list);
  list->callback([&] { action = [&] { return runner.mutate_list(); }; });
  CLI::App* apply = mutate->add_subcommand("apply", "apply one square");
  apply->add_option("--collection", o.collection)->required();
  apply->add_option("--square", o.square, "e.g. '{\"S\":[3],\"abcd\":[1,4,5,6]}'")->required();
  apply->add_option("--out", o.out);
  add_ground(apply);
  apply->callback([&] { action = [&] { return runner.mutate_apply(); }; });

  CLI::App* fg = app.add_subcommand("flipgraph", "mutation graph of a positroid");
  fg->add_option("--necklace", o.necklace)->required();
  fg->add_option("--frozen", o.frozen);
  fg->add_option("--out", o.out);
  fg->add_option("--max-facets", o.max_facets);
  fg->callback([&] { action = [&] { return runner.flipgraph(); }; });

  CLI::App* path = app.add_subcommand("path", "mutation paths fixing a frozen set");
  path->require_subcommand(1);
  CLI::App* find = path->add_subcommand("find", "construct a path");
  find->add_option("--necklace", o.necklace)->required();
  find->add_option("--frozen", o.frozen);
  find->add_option("--from", o.from)->required();
  find->add_option("--to", o.to)->required();
  find->add_option("--out", o.out);
  find->callback([&] { action = [&] { return runner.path_find(); }; });
  CLI::App* check = path->add_subcommand("verify", "replay and check a path");
  check->add_option("--path", o.path)->required();
  check->add_option("--out", o.out);
  check->callback([&] { action = [&] { return runner.path_verify(); }; });

  CLI::App* verify = app.add_subcommand("verify", "complex-level checks");
  verify->require_subcommand(1);
  CLI::App* pm = verify->add_subcommand("pseudomanifold", "pure, non-branching, strongly connected");
  pm->add_option("--necklace", o.necklace)->required();
  pm->add_option("--links", o.links, "none | all | sample:N");
  pm->add_option("--seed", o.seed);
  pm->add_option("--max-face-size", o.max_face_size);
  pm->add_option("--max-faces", o.max_faces);
  pm->add_option("--max-facets", o.max_facets);
  pm->add_option("--report", o.report);
  pm->callback([&] { action = [&] { return runner.verify_pm(); }; });

  std::vector<std::string> argv_store{"plabic"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto report = [&](std::string_view code, const std::string& message) {
    err << Json{{"error", code}, {"message", message}}.dump() << "\n";
  };
  try {
    return action();
  } catch (const Error& e) {
    report(error_code_name(e.code()), e.what());
    return is_theorem_violation(e.code()) ? kExitTheorem : kExitDomain;
  } catch (const Json::exception& e) {
    report("invalid-argument", e.what());
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    report("invalid-argument", e.what());
    return kExitDomain;
  }
}

}  // namespace plabic

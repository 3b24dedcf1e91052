#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "io.hpp"

using namespace recip;
using recip::io::json;

namespace {

const std::string kData = RECIP_DATA_DIR;

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run(cli::RunConfig cfg) {
  std::ostringstream out, err;
  const int status = cli::run(cfg, out, err);
  return {status, out.str(), err.str()};
}

cli::RunConfig config(std::string command, std::string file, std::vector<std::size_t> select = {}) {
  cli::RunConfig cfg;
  cfg.command = std::move(command);
  cfg.input = file.empty() ? "" : kData + "/" + file;
  cfg.select = std::move(select);
  return cfg;
}

cli::RunConfig as_json(cli::RunConfig cfg) {
  cfg.format = cli::Format::json;
  return cfg;
}

}  // namespace

TEST_CASE("reciprocity exit codes") {
  const auto adj = run(config("reciprocity", "square_cone.json", {0, 2}));
  CHECK(adj.status == 0);
  CHECK(adj.out.find("holds: true") != std::string::npos);

  const auto opp = run(as_json(config("reciprocity", "square_cone.json", {0, 1})));
  CHECK(opp.status == 1);
  const json j = json::parse(opp.out);
  CHECK(j["holds"] == false);
  CHECK(j["first_disagreement"]["degree"] == 0);
  CHECK(j["first_disagreement"]["lhs"] == 1);
  CHECK(j["first_disagreement"]["rhs"] == 0);
  CHECK(j["cm"]["Q"] == false);
  CHECK(j["cm"]["F2"] == false);
}

TEST_CASE("cm on the projective plane over F2") {
  auto cfg = as_json(config("cm", "rp2.json"));
  cfg.fields = {FieldSpec::prime(2)};
  const auto r = run(cfg);
  CHECK(r.status == 1);
  const json j = json::parse(r.out);
  const json& f2 = j["fields"]["F2"];
  CHECK(f2["cm"] == false);
  CHECK(f2["failure"]["face"] == json::array());
  CHECK(f2["failure"]["degree"] == 1);
  CHECK(f2["failure"]["betti"] == 1);

  cfg.fields = {FieldSpec::rationals()};
  CHECK(run(cfg).status == 0);
}

TEST_CASE("other subcommands") {
  CHECK(run(config("enumerate", "pentagon.json", {0, 2})).status == 0);
  CHECK(run(config("separate", "square_cone.json", {0, 2})).status == 0);
  CHECK(run(config("separate", "square_cone.json", {0, 1})).status == 1);
  CHECK(run(config("shell", "hexagon.json", {0, 1})).status == 0);
  CHECK(run(config("colon", "quadrant.json", {0})).status == 0);
  CHECK(run(config("lift", "two_segments.json")).status == 0);
  CHECK(run(config("lift", "two_triangles.json")).status == 0);
  auto sch = config("schlegel", "cube.json", {0, 1, 2, 3, 4});
  sch.avoid = 5;
  CHECK(run(sch).status == 0);
  CHECK(run(config("cm", "solid_torus.json")).status == 1);
}

TEST_CASE("shell at a given point") {
  auto cfg = as_json(config("shell", "square_cone.json", {0, 2}));
  cfg.point = RatVector{-1, -1, 0};
  const auto r = run(cfg);
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["selection_is_prefix"] == true);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run(config("reciprocity", "missing.json", {0})).status == 2);
  CHECK(run(config("reciprocity", "square_cone.json", {})).status == 2);
  CHECK(run(config("reciprocity", "square_cone.json", {9})).status == 2);
  CHECK(run(config("reciprocity", "rp2.json", {0})).status == 2);
  CHECK(run(config("lift", "square_cone.json")).status == 2);
  auto bad_grading = config("reciprocity", "square_cone.json", {0, 2});
  bad_grading.grading = IntVector{1, 0, 0};
  CHECK(run(bad_grading).status == 2);
  auto bad_degree = config("colon", "quadrant.json", {0});
  bad_degree.degree = 0;
  CHECK(run(bad_degree).status == 2);
  auto no_avoid = config("schlegel", "cube.json", {0});
  CHECK(run(no_avoid).status == 2);
  CHECK(run(config("frobnicate", "quadrant.json")).status == 2);
}

TEST_CASE("parse errors carry line and column") {
  try {
    io::parse_json("{\n  \"rays\": [1,\n  ]}");
    FAIL("no exception");
  } catch (const io::InputError& e) {
    CHECK(e.where() == "3:3");
  }
  try {
    io::parse_document(json::parse(R"({"dim": 2, "rays": [[1, 0], [0, "a"]]})"));
    FAIL("no exception");
  } catch (const io::InputError& e) {
    CHECK(e.where() == "/rays/1/1");
  }
  CHECK_THROWS_AS(io::parse_document(json::parse(R"({"dim": 3, "rays": [[1, 0]]})")), io::InputError);
  CHECK_THROWS_AS(io::parse_document(json::parse(R"({"vertices": [["0"]], "facets": [[1]]})")), io::InputError);
  CHECK_THROWS_AS(io::parse_document(json::parse(R"({"polytope": [["1/0"]]})")), io::InputError);
  CHECK_THROWS_AS(io::parse_document(json::parse("[]")), io::InputError);
}

TEST_CASE("sample inputs round-trip") {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kData)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    INFO(entry.path().filename().string());
    const io::Document d = io::parse_document(io::load_json(entry.path().string()));
    const std::string text = io::to_json(d).dump();
    const io::Document back = io::parse_document(io::parse_json(text));
    CHECK(back == d);
    CHECK(io::to_json(back).dump() == text);
  }
  CHECK(files >= 8);
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<cli::RunConfig> configs{config("reciprocity", "square_cone.json", {0, 1}),
                                      config("enumerate", "hexagon.json", {0, 3}),
                                      config("cm", "rp2.json"),
                                      config("shell", "pentagon.json", {1, 2}),
                                      config("colon", "square_cone.json", {0, 2}),
                                      config("lift", "two_triangles.json")};
  auto sch = config("schlegel", "cube.json", {0, 2});
  sch.avoid = 1;
  configs.push_back(sch);
  for (const auto& cfg : configs) {
    for (auto fmt : {cli::Format::text, cli::Format::json}) {
      auto c = cfg;
      c.format = fmt;
      c.seed = 42;
      const auto a = run(c), b = run(c);
      INFO(cfg.command);
      CHECK(a.status == b.status);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }
}

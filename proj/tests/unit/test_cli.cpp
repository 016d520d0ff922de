#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "toric/cli.hpp"
#include "toric/error.hpp"
#include "toric/json_io.hpp"
#include "toric/polytope.hpp"

using namespace toric;
using namespace toric::testing;
using json_io::Json;

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return std::string(TORIC_EXAMPLES_DIR) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("toric_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

std::set<IntVector> vertex_set(const Json& j) {
  auto vs = json_io::int_vectors_from_json(j.at("vertices"), j.at("rank").get<std::size_t>());
  return {vs.begin(), vs.end()};
}

}  // namespace

TEST_CASE("cli reflexive and polar round trip") {
  auto r = run({"reflexive", example("quintic.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"reflexive\":true}\n");
  CHECK(run({"reflexive", example("thin_triangle.json")}).out == "{\"reflexive\":false}\n");

  TempDir tmp;
  for (const char* name : {"quintic.json", "cube.json", "octahedron.json", "hexagon.json", "p2_anticanonical.json"}) {
    std::string once = tmp.path / "once.json";
    auto a = run({"polar", example(name), "--out", once});
    REQUIRE(a.code == 0);
    CHECK(a.out.empty());
    auto b = run({"polar", once});
    REQUIRE(b.code == 0);
    std::ifstream in(example(name));
    Json original = Json::parse(in);
    Json twice = Json::parse(b.out);
    CHECK(vertex_set(twice) == vertex_set(original));
    CHECK(twice.at("lattice") == "M");
    // the emitted facets describe the polar polytope: every vertex satisfies them
    Json p = Json::parse(std::ifstream(once));
    for (const auto& f : p.at("facets")) {
      auto normal = json_io::int_vector_from_json(f.at("normal"), p.at("rank"));
      for (const auto& v : vertex_set(p)) CHECK(dot(normal, v) + json_io::integer_from_json(f.at("offset")) >= 0);
    }
  }
}

TEST_CASE("cli mirror data") {
  auto r = run({"mdmm", example("quintic.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("rank") == 1);
  CHECK(j.at("dominance") == "holds");
  CHECK(j.at("points").size() == 5);
  CHECK(j.at("torsion").empty());

  Json h = Json::parse(run({"hodge", example("quintic.json")}).out);
  CHECK(h.at("h11_toric") == 1);
  CHECK(h.at("hd11_poly") == 101);
  CHECK(h.at("mirror").at("h11_toric") == 101);
  CHECK(h.at("mirror").at("hd11_poly") == 1);

  Json roots = Json::parse(run({"roots", example("p2_anticanonical.json")}).out);
  CHECK(roots.at("count") == 6);
  CHECK(roots.at("aut_dimension") == 8 + 1);
}

TEST_CASE("cli secondary fan") {
  auto r = run({"secondary", example("p2_anticanonical.json"), "--chambers"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.at("chambers").size() == 2);
  int geometric = 0;
  for (const auto& c : j.at("chambers")) geometric += c.at("phase") == "geometric";
  CHECK(geometric == 1);
  CHECK(j.at("count") == 2);
  CHECK_FALSE(Json::parse(run({"secondary", example("square_center.json")}).out).contains("chambers"));

  TempDir tmp;
  auto heights = tmp.write("h.json", "[\"1/2\",0,0,0,1]");
  Json ph = Json::parse(run({"phase", example("square_center.json"), "--heights", heights}).out);
  CHECK(ph.at("phase") == "other");
  auto flat = tmp.write("flat.json", "[0,0,0,0,0]");
  CHECK(run({"phase", example("square_center.json"), "--heights", flat}).code == 2);
}

TEST_CASE("cli exit codes") {
  TempDir tmp;
  auto broken = tmp.write("broken.json", "{\"rank\":2,\"vertices\":[[1,0],");
  auto no_vertices = tmp.write("nov.json", "{\"rank\":2}");
  auto short_vertex = tmp.write("short.json", "{\"rank\":2,\"vertices\":[[1,0],[0]]}");
  auto flat = tmp.write("flat.json", "{\"rank\":2,\"vertices\":[[0,0],[1,1],[2,2]]}");
  auto bad_divisor = tmp.write("d.json", "{\"coefficients\":{\"7\":1}}");

  CHECK(run({}).code == 1);
  CHECK(run({"bogus", example("quintic.json")}).code == 1);
  CHECK(run({"reflexive"}).code == 1);
  CHECK(run({"reflexive", example("quintic.json"), "--chambers"}).code == 1);
  CHECK(run({"subdivide", example("hexagon.json"), "--seed", "abc"}).code == 1);
  CHECK(run({"phase", example("square_center.json")}).code == 1);
  CHECK(run({"reflexive", (tmp.path / "missing.json").string()}).code == 1);
  CHECK(run({"reflexive", broken}).code == 1);
  CHECK(run({"reflexive", no_vertices}).code == 1);
  CHECK(run({"reflexive", short_vertex}).code == 1);
  CHECK(run({"classgroup", example("p112.json"), "--divisor", bad_divisor}).code == 1);
  auto e = run({"reflexive", flat});
  CHECK(e.code == 2);
  CHECK(e.err.find("not full-dimensional") != std::string::npos);
  CHECK(run({"mdmm", example("thin_triangle.json")}).code == 2);
  CHECK(run({"polar", example("thin_triangle.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli output is deterministic") {
  for (const auto& entry : fs::directory_iterator(TORIC_EXAMPLES_DIR)) {
    if (entry.path().extension() != ".cmd") continue;
    std::ifstream in(entry.path());
    std::vector<std::string> args;
    for (std::string w; in >> w;) args.push_back(w.find(".json") != std::string::npos ? example(w) : w);
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::accept(a.out));
  }
}

TEST_CASE("wide integers serialize as strings") {
  Integer big("1180591620717411303424");  // 2^70
  CHECK(json_io::to_json(big) == Json("1180591620717411303424"));
  CHECK(json_io::to_json(Integer(-5)) == Json(-5));
  CHECK(json_io::integer_from_json(Json("1180591620717411303424")) == big);
  CHECK(json_io::rational_from_json(Json("-6/4")) == Rational(-3, 2));
  CHECK(json_io::to_json(Rational(-3, 2)) == Json("-3/2"));
  CHECK_THROWS_AS(json_io::integer_from_json(Json("12x")), InputError);
  CHECK_THROWS_AS(json_io::rational_from_json(Json("1/0")), InputError);

  auto P = hull(pts({{0, 0}, {1, 0}, {0, 1}}), M(2));
  Json j = json_io::polytope_to_json(hull({IntVector{0, 0}, IntVector{big, 0}, IntVector{0, 1}}, M(2)), false);
  CHECK(j.dump().find("\"1180591620717411303424\"") != std::string::npos);
  CHECK(json_io::polytope_from_json(j).vertices().size() == 3);
  CHECK(json_io::polytope_from_json(json_io::polytope_to_json(P, true)) == P);

  TempDir tmp;
  auto file = tmp.write("big.json", j.dump());
  auto r = run({"reflexive", file});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"reflexive\":false}\n");
}

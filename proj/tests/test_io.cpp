#include <doctest.h>

#include "io.hpp"
#include "rigidify/errors.hpp"

using namespace rigidify;
using namespace rigidify::cli;

TEST_CASE("fixture specs") {
  CHECK(load_fixture("simplex:3").get().f_vector() == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(load_fixture("horn:3:1").get().f_vector() == std::vector<std::size_t>{4, 6, 3});
  auto const sq = load_fixture("simplex:1*simplex:1");
  CHECK(sq.get().f_vector() == std::vector<std::size_t>{4, 5, 2});
  CHECK(sq.name == "simplex:1*simplex:1");
  CHECK_THROWS_AS(load_fixture("simplex:x"), InvalidInput);
  CHECK_THROWS_AS(load_fixture("nothing"), InvalidInput);
  CHECK_THROWS_AS(load_fixture("loop*simplex:1"), NotOrdered);
}

TEST_CASE("ordered JSON input") {
  auto const doc = Json::parse(R"j({"ordered":{"maximal_chains":[[0,1,2],[1,2,3]]}})j");
  auto const in = load_json(doc, "tt");
  CHECK(in.get().f_vector() == std::vector<std::size_t>{4, 5, 2});
  CHECK_NOTHROW(in.ordered());

  auto const bad = Json::parse(R"j({"ordered":{"maximal_chains":[[0,1],[1,0]]}})j");
  CHECK_THROWS_AS(load_json(bad, "cycle"), NotOrdered);
  CHECK_THROWS_AS(load_json(Json::parse(R"j({"ordered":{}})j"), "x"), InvalidInput);
  CHECK_THROWS_AS(load_json(Json::parse(R"j([1,2])j"), "x"), InvalidInput);
}

TEST_CASE("generated JSON input") {
  auto const doc = Json::parse(R"j({"generated":{
    "generators":{"0":["v"],"1":["e"],"2":["t"]},
    "faces":{"e":[["d",0,"v"],["d",1,"v"]],
             "t":[["d",0,"e"],["d",1,"s0(v)"],["d",2,"e"]]}}})j");
  auto const in = load_json(doc, "rp2");
  auto const& c = in.get();
  CHECK(c.f_vector() == std::vector<std::size_t>{1, 1, 1});
  auto const d1 = c.generator_face(2, 0, 1);
  CHECK(d1.is_degenerate());
  CHECK(key_string(c, d1) == "s0(v)");
  CHECK_THROWS_AS(in.ordered(), NotOrdered);

  auto const& g = std::get<GeneratedComplex>(in.complex);
  CHECK(parse_key(g, "s1s0(v)").dim == 2);
  CHECK(parse_key(g, "e") == SimplexKey::nondegenerate(1, 0));
  CHECK_THROWS_AS(parse_key(g, "w"), InvalidInput);

  auto const missing = Json::parse(R"j({"generated":{
    "generators":{"0":["v"],"1":["e"]},"faces":{"e":[["d",0,"v"]]}}})j");
  CHECK_THROWS_AS(load_json(missing, "x"), InvalidInput);
  auto const unknown = Json::parse(R"j({"generated":{
    "generators":{"0":["v"],"1":["e"]},"faces":{"e":[["d",0,"v"],["d",1,"u"]]}}})j");
  CHECK_THROWS_AS(load_json(unknown, "x"), InvalidInput);
}

TEST_CASE("mapping-space report") {
  auto const in = load_fixture("two_triangles");
  auto const report = mapping_space_report(in.name, mapping_space(in.ordered(), 0, 3));
  CHECK(report["f_vector"] == Json::parse("[3,2]"));
  CHECK(report.begin().key() == "command");
  auto const& edge = report["dimensions"][1]["simplices"][0];
  CHECK(edge.contains("beads"));
  CHECK(edge["flag"].size() == 2);
  CHECK(report["dimensions"][1]["faces"][0].size() == 2);
  CHECK(render_table(report).find("f-vector [3,2]") != std::string::npos);
}

TEST_CASE("homology and oracle reports") {
  auto const in = load_fixture("boundary:3");
  auto const space = mapping_space(in.ordered(), 0, 3);
  auto const h = homology_report(in.name, "C(0,3)", space.complex, -1);
  CHECK(h["betti"] == Json::parse("[1,1]"));
  CHECK(h["homology_point"] == false);

  bool equal = false;
  auto const o = oracle_report(3, 2, equal);
  CHECK(equal);
  CHECK(o["all_equal"] == true);
}

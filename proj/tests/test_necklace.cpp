#include <set>

#include <doctest.h>

#include "rigidify/errors.hpp"
#include "rigidify/fixtures.hpp"
#include "rigidify/necklace.hpp"

using namespace rigidify;

TEST_CASE("preferred form drops inner points") {
  CHECK(preferred_form({1, 0, 2}).beads() == std::vector<int>{1, 2});
  CHECK(preferred_form({0}).beads() == std::vector<int>{0});
  CHECK(preferred_form({0, 0, 0}).beads() == std::vector<int>{0});
  CHECK_THROWS_AS(preferred_form({}), InvalidInput);
  CHECK_THROWS(Necklace(std::vector<int>{1, 0}));
}

TEST_CASE("necklace vertices and joints") {
  Necklace const t({2, 1});
  CHECK(t.vertex_count() == 4);
  CHECK(t.joints().elements() == std::vector<VertexId>{0, 2, 3});
  CHECK(t.vertices().elements() == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(t.bead_containing(0, 2) == std::optional<std::size_t>{0});
  CHECK_FALSE(t.bead_containing(1, 3).has_value());
  CHECK(Necklace::point().vertex_count() == 1);
}

TEST_CASE("wedges") {
  auto const w = wedge(Necklace::simplex(1), Necklace::simplex(1));
  CHECK(w.necklace.beads() == std::vector<int>{1, 1});
  CHECK(w.necklace.joints().elements() == std::vector<VertexId>{0, 1, 2});
  CHECK(w.right == std::vector<VertexId>{1, 2});

  Necklace const t({2, 1});
  CHECK(wedge(t, Necklace::point()).necklace == t);
  CHECK(wedge(Necklace::point(), t).necklace == t);
  auto const w21 = wedge(Necklace::simplex(2), Necklace::simplex(1));
  CHECK(w21.necklace.vertex_count() == 4);
  CHECK(w21.necklace.joints().elements() == std::vector<VertexId>{0, 2, 3});
}

TEST_CASE("outer simplex and spine") {
  Necklace const t({2, 1});
  CHECK(outer_simplex(t).target().beads() == std::vector<int>{3});
  CHECK(spine(t).source().beads() == std::vector<int>{1, 1, 1});
  auto const one = Necklace::simplex(1);
  CHECK(outer_simplex(one).source() == one);
  CHECK(outer_simplex(one).target() == one);
  CHECK(spine(one).source() == one);
  auto const sp = spine(Necklace::simplex(3));
  CHECK(sp.vertex_map() == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(sp.is_injective());
}

TEST_CASE("necklace maps into ordered complexes") {
  auto const tt = standard_ordered("two_triangles");
  auto const f = make_map(Necklace({1, 1}), tt, {0, 1, 3});
  CHECK(f.source() == 0);
  CHECK(f.target() == 3);
  CHECK(is_totally_nondegenerate(f));
  CHECK(is_injective(f));
  CHECK_THROWS_AS(make_map(Necklace({1, 1}), tt, {0, 3, 1}), InvalidInput);

  auto const d2 = standard_ordered("simplex", {2});
  CHECK(make_map(Necklace::simplex(1), d2, {0, 2}).beads.size() == 1);

  auto const d1 = standard_ordered("simplex", {1});
  CHECK_FALSE(is_totally_nondegenerate(make_map(Necklace::simplex(1), d1, {0, 0})));
}

TEST_CASE("a totally nondegenerate map need not be injective") {
  auto const loop_held = standard("loop");
  auto const& loop = as_complex(loop_held);
  auto const m = make_map(Necklace::simplex(1), loop, {SimplexKey::nondegenerate(1, 0)});
  CHECK(is_totally_nondegenerate(m));
  CHECK_FALSE(is_injective(m));
}

TEST_CASE("collapsing degenerate beads") {
  auto const d1 = standard_ordered("simplex", {1});
  auto const a = collapse_to_nondegenerate(d1, make_map(Necklace({1, 1}), d1, {0, 1, 1}));
  CHECK(a.map.necklace.beads() == std::vector<int>{1});
  CHECK(a.map.vertices == std::vector<VertexId>{0, 1});
  CHECK(a.surjection.vertex_map() == std::vector<VertexId>{0, 1, 1});

  auto const b = collapse_to_nondegenerate(d1, make_map(Necklace::simplex(2), d1, {0, 0, 1}));
  CHECK(b.map.necklace.beads() == std::vector<int>{1});
  CHECK(b.map.vertices == std::vector<VertexId>{0, 1});

  auto const tt = standard_ordered("two_triangles");
  auto const f = make_map(Necklace({1, 2}), tt, {0, 1, 2, 3});
  auto const c = collapse_to_nondegenerate(tt, f);
  CHECK(c.map == f);
  CHECK(c.surjection == NecklaceMorphism::identity(f.necklace));
}

TEST_CASE("injective necklace maps") {
  auto const tt = standard_ordered("two_triangles");
  auto const maps = enumerate_injective_maps(tt, 0, 3);
  REQUIRE(maps.size() == 5);
  std::multiset<std::vector<int>> shapes;
  for (auto const& m : maps) {
    shapes.insert(m.necklace.beads());
  }
  CHECK(shapes == std::multiset<std::vector<int>>{{1, 1}, {1, 1}, {1, 1, 1}, {1, 2}, {2, 1}});

  for (int n = 0; n <= 4; ++n) {
    auto const s = standard_ordered("simplex", {n});
    for (VertexId i = 0; i <= static_cast<VertexId>(n); ++i) {
      CHECK(enumerate_injective_maps(s, i, i).size() == 1);
    }
  }
  // Subsets V of {0..3} containing 0 and 3, then joints between.
  CHECK(enumerate_injective_maps(standard_ordered("simplex", {3}), 0, 3).size() == 9);
}

TEST_CASE("necklace morphisms") {
  Necklace const t({1, 1});
  Necklace const u({2});
  NecklaceMorphism const inc(t, u, {0, 1, 2});
  CHECK(inc.is_injective());
  CHECK(inc.is_surjective());
  NecklaceMorphism const edge(Necklace::simplex(1), u, {0, 2});
  CHECK_FALSE(edge.is_surjective());
  CHECK(edge.image(VertexSet::interval(0, 1)).elements() == std::vector<VertexId>{0, 2});
  CHECK_THROWS(NecklaceMorphism(t, u, {0, 2, 1}));
  CHECK_THROWS(NecklaceMorphism(t, u, {1, 1, 2}));
  CHECK(inc.after(NecklaceMorphism::identity(t)) == inc);
}

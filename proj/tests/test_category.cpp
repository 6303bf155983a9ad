#include <set>

#include <doctest.h>

#include "rigidify/category.hpp"
#include "rigidify/errors.hpp"
#include "rigidify/fixtures.hpp"
#include "rigidify/homology.hpp"

using namespace rigidify;

TEST_CASE("mapping spaces of small ordered complexes") {
  auto const tt = standard_ordered("two_triangles");
  auto const x = mapping_space(tt, 0, 3);
  CHECK(x.f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(pi0(x.complex).count == 1);
  CHECK(mapping_space(standard_ordered("simplex", {3}), 0, 3).f_vector() ==
        std::vector<std::size_t>{4, 5, 2});
  auto const d2 = standard_ordered("simplex", {2});
  CHECK(mapping_space(d2, 2, 0).empty());
  CHECK(mapping_space(d2, 2, 0).f_vector().empty());
  CHECK(mapping_space(d2, 1, 1).f_vector() == std::vector<std::size_t>{1});
}

TEST_CASE("boundary and horn mapping spaces") {
  auto const b = mapping_space(standard_ordered("boundary", {3}), 0, 3);
  auto const h = homology(b.complex);
  CHECK(h.groups[0].betti == 1);
  CHECK(h.groups[1].betti == 1);
  CHECK(h.is_sphere(1));
  for (int k = 1; k <= 2; ++k) {
    auto const horn = mapping_space(standard_ordered("horn", {3, k}), 0, 3);
    CHECK(is_homology_point(horn.complex));
  }
}

TEST_CASE("encode and decode are inverse") {
  auto const s = standard_ordered("simplex", {3});
  auto const space = mapping_space(s, 0, 3);
  for (int d = 0; d <= 3; ++d) {
    for (auto const& key : space.complex.simplices(d)) {
      auto const m = space.decode(key);
      CHECK(m.dim() == d);
      CHECK(space.encode(m) == key);
      CHECK(m.is_degenerate() == key.is_degenerate());
    }
  }
}

TEST_CASE("bounded mapping spaces of non-ordered complexes") {
  auto const loop_held = standard("loop");
  auto const& loop = as_complex(loop_held);
  auto const small = mapping_space_bounded(loop, 0, 0, 3);
  CHECK(small.truncated);
  CHECK(small.f_vector() == std::vector<std::size_t>{3});
  auto const tt = standard_ordered("two_triangles");
  auto const full = mapping_space_bounded(tt, 0, 3, 8);
  CHECK_FALSE(full.truncated);
  CHECK(full.f_vector() == mapping_space(tt, 0, 3).f_vector());
}

TEST_CASE("categorify") {
  auto const c1 = categorify(standard_ordered("simplex", {1}));
  CHECK(c1.object_count() == 2);
  CHECK(c1.hom(0, 1).f_vector() == std::vector<std::size_t>{1});
  CHECK(c1.hom(1, 0).empty());

  auto const c2 = categorify(standard_ordered("simplex", {2}));
  CHECK(c2.hom(0, 2).f_vector() == std::vector<std::size_t>{2, 1});
  // The composite through 1 is the spine vertex, one end of the edge.
  auto const through = c2.composition(0, 1, 2, 0, 0, 0);
  auto const& spine = c2.hom(0, 2).simplices[0][through];
  CHECK(spine.necklace().beads() == std::vector<int>{1, 1});

  auto const ctt = categorify(standard_ordered("two_triangles"));
  CHECK(ctt.hom(0, 3).f_vector() == std::vector<std::size_t>{3, 2});
}

TEST_CASE("units and associativity on all simplices of low dimension") {
  auto const cat = categorify(standard_ordered("two_triangles"));
  std::size_t const n = cat.object_count();
  for (int d = 0; d <= 2; ++d) {
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a; b < n; ++b) {
        for (auto const& f : cat.hom(a, b).complex.simplices(d)) {
          CHECK(cat.compose(a, b, b, cat.identity(b, d), f) == f);
          CHECK(cat.compose(a, a, b, f, cat.identity(a, d)) == f);
          for (VertexId c = b; c < n; ++c) {
            for (auto const& g : cat.hom(b, c).complex.simplices(d)) {
              auto const gf = cat.compose(a, b, c, g, f);
              for (VertexId e = c; e < n; ++e) {
                for (auto const& h : cat.hom(c, e).complex.simplices(d)) {
                  CHECK(cat.compose(a, c, e, h, gf) ==
                        cat.compose(a, b, e, cat.compose(b, c, e, h, g), f));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("functoriality") {
  auto const d1 = standard_ordered("simplex", {1});
  auto const d2 = standard_ordered("simplex", {2});
  auto const id = OrderedMap(d2, d2, {0, 1, 2});
  auto const space = mapping_space(d2, 0, 2);
  for (auto const& level : space.simplices) {
    for (auto const& m : level) {
      CHECK(induced_map(id, m) == m);
    }
  }
  CHECK(is_isomorphism(induced_space_map(id, space, space), space.complex, space.complex));
  CHECK_THROWS_AS(OrderedMap(d1, d2, {1, 0}), InvalidInput);

  auto const square = product(d1, d1);
  auto const proj = OrderedMap(square, d1, {0, 0, 1, 1});
  auto const diag = mapping_space(square, 0, 3);
  auto const target = mapping_space(d1, 0, 1);
  for (auto const& m : diag.simplices[0]) {
    CHECK(target.find(induced_map(proj, m)).has_value());
  }
}

TEST_CASE("products surject onto pairs of vertices") {
  auto const d1 = standard_ordered("simplex", {1});
  auto const d2 = standard_ordered("simplex", {2});
  auto const prism = product(d2, d1);
  auto const px = OrderedMap(prism, d2, {0, 0, 1, 1, 2, 2});
  auto const py = OrderedMap(prism, d1, {0, 1, 0, 1, 0, 1});
  auto const space = mapping_space(prism, 0, 5);
  auto const sx = mapping_space(d2, 0, 2);
  auto const sy = mapping_space(d1, 0, 1);
  std::set<std::pair<std::size_t, std::size_t>> hit;
  for (auto const& m : space.simplices[0]) {
    hit.emplace(*sx.find(induced_map(px, m)), *sy.find(induced_map(py, m)));
  }
  CHECK(hit.size() == sx.simplices[0].size() * sy.simplices[0].size());
  CHECK(is_homology_point(space.complex));
}

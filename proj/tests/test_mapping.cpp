#include <doctest.h>

#include "rigidify/category.hpp"
#include "rigidify/errors.hpp"
#include "rigidify/fixtures.hpp"
#include "rigidify/homology.hpp"
#include "rigidify/mapping.hpp"

using namespace rigidify;

namespace {

VertexSet set(std::vector<VertexId> v) { return VertexSet::of(v); }

MappingSimplex canonical(Complex const& s, Necklace t, std::vector<VertexId> images,
                         Flag flag) {
  auto const& o = dynamic_cast<OrderedComplex const&>(s);
  return canonicalize(s, FlaggedTriple{make_map(t, o, images), std::move(flag)});
}

}  // namespace

TEST_CASE("flags must run from joints to vertices") {
  Necklace const t({1, 2});
  CHECK_NOTHROW(validate_flag(t, {set({0, 1, 3}), set({0, 1, 2, 3})}));
  CHECK_THROWS_AS(validate_flag(t, {}), ContractViolation);
  CHECK_THROWS_AS(validate_flag(t, {set({0, 3})}), ContractViolation);
  CHECK_THROWS_AS(validate_flag(t, {set({0, 1, 2, 3}), set({0, 1, 3})}), ContractViolation);
}

TEST_CASE("flankify") {
  auto const d3 = standard_ordered("simplex", {3});
  FlaggedTriple const long_edge{make_map(Necklace::simplex(3), d3, {0, 1, 2, 3}),
                                {set({0, 3}), set({0, 3})}};
  CHECK_FALSE(is_flanked(long_edge));
  auto const f = flankify(d3, long_edge);
  CHECK(f.necklace().beads() == std::vector<int>{1});
  CHECK(f.map.vertices == std::vector<VertexId>{0, 3});
  CHECK(f.flag == Flag{set({0, 1}), set({0, 1})});

  auto const d2 = standard_ordered("simplex", {2});
  FlaggedTriple const spine{make_map(Necklace({1, 1}), d2, {0, 1, 2}),
                            {set({0, 1, 2}), set({0, 1, 2})}};
  CHECK(is_flanked(spine));
  CHECK(flankify(d2, spine) == spine);
}

TEST_CASE("canonical form") {
  auto const d1 = standard_ordered("simplex", {1});
  auto const m = canonical(d1, Necklace({1, 1}), {0, 1, 1}, {set({0, 1, 2}), set({0, 1, 2})});
  CHECK(m.necklace().beads() == std::vector<int>{1});
  CHECK(m.map().vertices == std::vector<VertexId>{0, 1});
  CHECK(m.flag() == Flag{set({0, 1}), set({0, 1})});
  CHECK(canonicalize(d1, m.triple()) == m);

  auto const tt = standard_ordered("two_triangles");
  FlaggedTriple const edge{make_map(Necklace({1, 2}), tt, {0, 1, 2, 3}),
                           {set({0, 1, 3}), set({0, 1, 2, 3})}};
  CHECK(canonicalize(tt, edge).triple() == edge);
}

TEST_CASE("faces of the two edges of the example") {
  auto const tt = standard_ordered("two_triangles");
  auto const m = canonical(tt, Necklace({1, 2}), {0, 1, 2, 3},
                           {set({0, 1, 3}), set({0, 1, 2, 3})});
  auto const d1 = face(tt, m, 1);
  CHECK(d1.necklace().beads() == std::vector<int>{1, 1});
  CHECK(d1.map().vertices == std::vector<VertexId>{0, 1, 3});
  CHECK(d1.flag() == Flag{set({0, 1, 2})});
  auto const d0 = face(tt, m, 0);
  CHECK(d0.necklace().beads() == std::vector<int>{1, 1, 1});
  CHECK(d0.map().vertices == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(d0.flag() == Flag{set({0, 1, 2, 3})});
  CHECK_THROWS_AS(face(tt, m, 2), ContractViolation);
}

TEST_CASE("simplicial identities on canonical simplices") {
  auto const s = standard_ordered("simplex", {4});
  auto const space = mapping_space(s, 0, 4);
  for (std::size_t d = 0; d < space.simplices.size(); ++d) {
    int const n = static_cast<int>(d);
    for (auto const& m : space.simplices[d]) {
      CHECK_FALSE(m.is_degenerate());
      for (int i = 0; i <= n; ++i) {
        CHECK(face(s, degeneracy(m, i), i) == m);
        CHECK(face(s, degeneracy(m, i), i + 1) == m);
        CHECK(degeneracy(m, i).is_degenerate());
      }
      for (int j = 1; n >= 2 && j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          CHECK(face(s, face(s, m, j), i) == face(s, face(s, m, i), j - 1));
        }
      }
    }
  }
}

TEST_CASE("composition") {
  auto const tt = standard_ordered("two_triangles");
  auto const f = canonical(tt, Necklace::simplex(1), {0, 1}, {set({0, 1})});
  auto const g = canonical(tt, Necklace::simplex(1), {1, 3}, {set({0, 1})});
  auto const gf = compose(tt, g, f);
  CHECK(gf.necklace().beads() == std::vector<int>{1, 1});
  CHECK(gf.map().vertices == std::vector<VertexId>{0, 1, 3});
  CHECK(gf.flag() == Flag{set({0, 1, 2})});

  CHECK(compose(tt, identity_simplex(tt, 1), f) == f);
  CHECK(compose(tt, g, identity_simplex(tt, 1)) == g);
  CHECK_THROWS(compose(tt, f, g));
}

TEST_CASE("mapping spaces of a necklace are cubes") {
  auto const t = Necklace::simplex(3);
  auto const cube = necklace_mapping_space(t, 0, 3);
  CHECK(cube.cube_dimension() == 2);
  CHECK(cube.complex.f_vector() == std::vector<std::size_t>{4, 5, 2});
  CHECK(is_homology_point(cube.complex));

  auto const bead = necklace_mapping_space(Necklace({1, 2, 1}), 0, 4);
  CHECK(bead.cube_dimension() == 1);
  CHECK(bead.complex.f_vector() == std::vector<std::size_t>{2, 1});

  auto const point = necklace_mapping_space(Necklace({1, 2, 1}), 2, 2);
  CHECK(point.complex.f_vector() == std::vector<std::size_t>{1});
  CHECK(necklace_mapping_space(t, 3, 1).complex.f_vector().empty());
}

TEST_CASE("faces of the cube") {
  auto const t = Necklace::simplex(3);
  CHECK(cube_face(t, 0, 3, set({0, 3}), set({1, 2}), {}) == std::vector<VertexSet>{set({0, 3})});
  CHECK(cube_face(t, 0, 3, set({0, 3}), {}, set({1, 2})) ==
        std::vector<VertexSet>{set({0, 3}), set({0, 1, 3}), set({0, 1, 2, 3})});
  CHECK(cube_face(t, 0, 3, set({0, 1, 2, 3}), {}, {}) ==
        std::vector<VertexSet>{set({0, 1, 2, 3})});
  // Overlapping, incomplete, or missing the joints.
  CHECK_THROWS_AS(cube_face(t, 0, 3, set({0, 1, 3}), set({1, 2}), {}), ContractViolation);
  CHECK_THROWS_AS(cube_face(t, 0, 3, set({0, 3}), {}, set({1})), ContractViolation);
  CHECK_THROWS_AS(cube_face(t, 0, 3, set({0, 1}), set({2, 3}), {}), ContractViolation);
}

#include <doctest.h>

#include "rigidify/fixtures.hpp"
#include "rigidify/homology.hpp"

using namespace rigidify;

namespace {

IntMatrix matrix(std::vector<std::vector<std::int64_t>> const& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

// One vertex, one loop e and a triangle with boundary e, s0(v), e.
GeneratedComplex projective_plane() {
  GeneratedComplex::Builder b;
  auto const v = b.add_generator(0, "v");
  auto const e = b.add_generator(1, "e");
  auto const t = b.add_generator(2, "t");
  b.set_face(1, e, 0, SimplexKey::vertex(v));
  b.set_face(1, e, 1, SimplexKey::vertex(v));
  b.set_face(2, t, 0, SimplexKey::nondegenerate(1, e));
  b.set_face(2, t, 1, SimplexKey{1, v, DegeneracyWord::from_indices({0})});
  b.set_face(2, t, 2, SimplexKey::nondegenerate(1, e));
  return std::move(b).build();
}

}  // namespace

TEST_CASE("smith normal form") {
  auto const s = smith_normal_form(matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(s.invariants == std::vector<std::int64_t>{2, 6, 12});
  CHECK(smith_normal_form(matrix({{0, 0}, {0, 0}})).rank() == 0);
  CHECK(smith_normal_form(matrix({{1, 2, 3}})).invariants == std::vector<std::int64_t>{1});
  CHECK(smith_normal_form(IntMatrix(0, 3)).rank() == 0);
}

TEST_CASE("matrix product") {
  auto const p = matrix({{1, 2}, {3, 4}}) * matrix({{0, 1}, {1, 0}});
  CHECK(p(0, 0) == 2);
  CHECK(p(1, 1) == 3);
  CHECK((matrix({{1, -1}}) * matrix({{1}, {1}})).is_zero());
  CHECK_THROWS(matrix({{1, 2}}) * matrix({{1, 2}}));
}

TEST_CASE("homology of simplices and spheres") {
  for (int n = 0; n <= 4; ++n) {
    auto const s_held = standard("simplex", {n});
    auto const& s = as_complex(s_held);
    CHECK(homology(s).is_point());
    CHECK(pi0(s).count == 1);
  }
  for (int n = 2; n <= 4; ++n) {
    auto const b_held = standard("boundary", {n});
    auto const& b = as_complex(b_held);
    CHECK(homology(b).is_sphere(n - 1));
  }
  auto const two_points_held = standard("boundary", {1});
  auto const& two_points = as_complex(two_points_held);
  CHECK(pi0(two_points).count == 2);
  CHECK_FALSE(is_homology_point(two_points));
  CHECK(homology(as_complex(standard("loop"))).is_sphere(1));
}

TEST_CASE("torsion") {
  auto const rp2 = projective_plane();
  CHECK(ChainComplex::normalized(rp2).squares_to_zero());
  auto const h = homology(rp2);
  REQUIRE(h.groups.size() == 3);
  CHECK(h.groups[0] == HomologyGroup{0, 1, {}});
  CHECK(h.groups[1] == HomologyGroup{1, 0, {2}});
  CHECK(h.groups[2] == HomologyGroup{2, 0, {}});
  CHECK(h.to_string() == "Z, Z/2, 0");
  CHECK_FALSE(h.is_point());
}

TEST_CASE("the empty complex is not a point") {
  GeneratedComplex const empty;
  CHECK_FALSE(homology(empty).is_point());
  CHECK_FALSE(is_homology_point(empty));
  CHECK(pi0(empty).count == 0);
}

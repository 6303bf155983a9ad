#include <doctest.h>

#include "rigidify/category.hpp"
#include "rigidify/errors.hpp"
#include "rigidify/fixtures.hpp"
#include "rigidify/horn.hpp"
#include "rigidify/nerve.hpp"

using namespace rigidify;

TEST_CASE("levels of a complex") {
  auto const levels = SimplicialLevels::of(as_complex(standard("simplex", {1})), 2);
  CHECK(levels.counts == std::vector<std::size_t>{2, 3, 4});
  CHECK(levels.top() == 2);
  CHECK(levels.faces[1].size() == 3);
}

TEST_CASE("nerves of posets fill their inner horns") {
  auto const r = inner_horn_check(as_complex(standard("simplex", {2})), 3);
  CHECK(r.ok());
  CHECK(r.horns_checked > 0);
}

TEST_CASE("a horn does not fill itself") {
  auto const r = inner_horn_check(as_complex(standard("horn", {2, 1})), 2);
  CHECK(r.failure_count == 1);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].n == 2);
  CHECK(r.failures[0].k == 1);
  CHECK(r.failures[0].faces[1] == HornFailure::missing);
}

TEST_CASE("horn check bounds") {
  auto const s_held = standard("simplex", {1});
  auto const& s = as_complex(s_held);
  CHECK_THROWS_AS(inner_horn_check(s, 1), ContractViolation);
  CHECK_THROWS_AS(inner_horn_check(s, 5), ContractViolation);
  CHECK_THROWS_AS(inner_horn_check(SimplicialLevels::of(s, 2), 3), ContractViolation);
}

TEST_CASE("coherent nerve of the arrow") {
  auto const nerve = coherent_nerve_truncated(categorify(standard_ordered("simplex", {1})), 3);
  CHECK(nerve.counts() == std::vector<std::size_t>{2, 3, 4, 5});
  auto const r = inner_horn_check(nerve.as_levels(), 3);
  CHECK(r.ok());
}

TEST_CASE("coherent nerve of a discrete category") {
  auto const nerve = coherent_nerve_truncated(categorify(standard_ordered("boundary", {1})), 3);
  CHECK(nerve.counts() == std::vector<std::size_t>{2, 2, 2, 2});
}

TEST_CASE("coherent nerve of the triangle") {
  auto const cat = categorify(standard_ordered("simplex", {2}));
  auto const nerve = coherent_nerve_truncated(cat, 3);
  std::size_t edges = 0;
  for (VertexId x = 0; x < 3; ++x) {
    for (VertexId y = 0; y < 3; ++y) {
      edges += cat.hom(x, y).empty() ? 0 : cat.hom(x, y).simplices[0].size();
    }
  }
  CHECK(nerve.counts()[0] == 3);
  CHECK(nerve.counts()[1] == edges);
  CHECK(edges == 7);
  CHECK(inner_horn_check(nerve.as_levels(), 2).ok());
}

// For objects 0,0,2,2 the square edge {0,3} -> {0,2,3} would run backwards.
TEST_CASE("the triangle's nerve has unfillable 3-horns") {
  auto const cat = categorify(standard_ordered("simplex", {2}));
  auto const nerve = coherent_nerve_truncated(cat, 3);
  auto const r = inner_horn_check(nerve.as_levels(), 3);
  CHECK(r.failure_count == 6);
  for (auto const& f : r.failures) {
    CHECK(f.n == 3);
    std::size_t const some = f.faces[f.k == 1 ? 3 : 0];
    auto const& objects = nerve.levels[2][some].objects;
    CHECK(objects.front() == 0);
    CHECK(objects.back() == 2);
  }
}

TEST_CASE("nerve level bound") {
  auto const cat = categorify(standard_ordered("simplex", {1}));
  CHECK_THROWS_AS(coherent_nerve_truncated(cat, 4), ContractViolation);
}

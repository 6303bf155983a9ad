#include <doctest.h>

#include "rigidify/complex.hpp"
#include "rigidify/errors.hpp"
#include "rigidify/fixtures.hpp"

using namespace rigidify;

namespace {

std::size_t nondegenerate_total(Complex const& c) {
  std::size_t total = 0;
  for (auto n : c.f_vector()) {
    total += n;
  }
  return total;
}

}  // namespace

TEST_CASE("degeneracy words are kept in normal form") {
  auto const w = DegeneracyWord::from_indices({1, 0});
  CHECK(w.to_string() == "s1s0");
  CHECK_THROWS(DegeneracyWord::from_indices({0, 0}));
  CHECK(DegeneracyWord::from_indices({0, 1}) == w);
  CHECK_THROWS(DegeneracyWord::from_indices({-1}));

  auto const pt_held = standard("simplex", {0});
  auto const& pt = as_complex(pt_held);
  auto const ss = pt.degeneracy(pt.degeneracy(SimplexKey::vertex(0), 0), 0);
  CHECK(ss.dim == 2);
  CHECK(ss.gen == 0);
  CHECK(ss.word.indices() == std::vector<int>{1, 0});
}

TEST_CASE("face of a degeneracy is the simplex again") {
  auto const s = standard_ordered("simplex", {3});
  for (int d = 0; d <= 2; ++d) {
    for (auto const& x : s.simplices(d)) {
      for (int i = 0; i <= d; ++i) {
        auto const y = s.degeneracy(x, i);
        CHECK(s.face(y, i) == x);
        CHECK(s.face(y, i + 1) == x);
      }
    }
  }
}

TEST_CASE("quotient of the edge by its boundary") {
  auto const loop_held = standard("loop");
  auto const& loop = as_complex(loop_held);
  CHECK(loop.f_vector() == std::vector<std::size_t>{1, 1});
  auto const e = SimplexKey::nondegenerate(1, 0);
  CHECK(loop.face(e, 0) == SimplexKey::vertex(0));
  CHECK(loop.face(e, 1) == SimplexKey::vertex(0));
  auto const verdict = is_ordered(loop);
  CHECK_FALSE(verdict.ordered);
  CHECK(verdict.clash.has_value());
  auto const rel = preceq(loop);
  CHECK(rel.size() == 1);
  CHECK(rel.related(0, 0));
}

TEST_CASE("ordered complexes from maximal chains") {
  for (int n = 0; n <= 5; ++n) {
    auto const s = OrderedComplex::from_maximal_chains({[n] {
      std::vector<VertexId> v;
      for (int i = 0; i <= n; ++i) {
        v.push_back(static_cast<VertexId>(i));
      }
      return v;
    }()});
    CHECK(nondegenerate_total(s) == (std::size_t{1} << (n + 1)) - 1);
  }
  auto const tt = OrderedComplex::from_maximal_chains({{0, 1, 2}, {1, 2, 3}});
  CHECK(tt.f_vector() == std::vector<std::size_t>{4, 5, 2});
  CHECK(tt.maximal_chains() == std::vector<std::vector<VertexId>>{{0, 1, 2}, {1, 2, 3}});

  CHECK_THROWS_AS(OrderedComplex::from_maximal_chains({{0, 1}, {1, 0}}), NotOrdered);
  try {
    OrderedComplex::from_maximal_chains({{0, 1}, {1, 0}});
  } catch (NotOrdered const& e) {
    CHECK(e.cycle().front() == e.cycle().back());
    CHECK(e.cycle().size() >= 3);
  }
}

TEST_CASE("standard fixtures") {
  CHECK(as_complex(standard("simplex", {2})).f_vector() == std::vector<std::size_t>{3, 3, 1});
  auto const horn = standard_ordered("horn", {2, 1});
  CHECK(horn.f_vector() == std::vector<std::size_t>{3, 2});
  CHECK_FALSE(horn.find(std::vector<VertexId>{0, 2}).has_value());
  CHECK(standard_ordered("boundary", {3}).f_vector() == std::vector<std::size_t>{4, 6, 4});
  CHECK(standard_ordered("two_triangles").f_vector() == std::vector<std::size_t>{4, 5, 2});
  CHECK_THROWS_AS(standard("nonsense"), InvalidInput);
}

TEST_CASE("products of ordered complexes") {
  auto const d1 = standard_ordered("simplex", {1});
  auto const d2 = standard_ordered("simplex", {2});
  auto const square = product(d1, d1);
  CHECK(square.f_vector() == std::vector<std::size_t>{4, 5, 2});
  auto const prism = product(d2, d1);
  CHECK(prism.f_vector() == std::vector<std::size_t>{6, 12, 10, 3});
  auto const tt = standard_ordered("two_triangles");
  CHECK(product(tt, standard_ordered("simplex", {0})).f_vector() == tt.f_vector());
}

TEST_CASE("the vertex preorder") {
  auto const rel = preceq(standard_ordered("two_triangles"));
  for (VertexId x = 0; x < 4; ++x) {
    for (VertexId y = 0; y < 4; ++y) {
      CHECK(rel.related(x, y) == (x <= y));
    }
  }
  CHECK(rel.is_reflexive());
  CHECK(rel.is_transitive());
  CHECK(rel.is_antisymmetric());
}

TEST_CASE("parallel edges are not ordered") {
  auto const c_held = standard("parallel_edges");
  auto const& c = as_complex(c_held);
  auto const verdict = is_ordered(c);
  CHECK_FALSE(verdict.ordered);
  REQUIRE(verdict.clash.has_value());
  CHECK(verdict.clash->first.dim == 1);
  CHECK(verdict.clash->second.dim == 1);
  CHECK(is_ordered(standard_ordered("simplex", {3})).ordered);
  CHECK_THROWS_AS(OrderedComplex::from_complex(c), NotOrdered);
}

TEST_CASE("simple inclusions of edges into the square") {
  auto const d1 = standard_ordered("simplex", {1});
  auto const square = product(d1, d1);
  int simple = 0;
  for (auto const& e : square.simplices(1)) {
    if (e.is_degenerate()) {
      continue;
    }
    auto const sub = Subcomplex::generated_by(square, {e});
    auto const verdict = is_simple_inclusion(sub, square);
    auto const v = square.vertices(e);
    if (v == std::vector<VertexId>{0, 3}) {
      CHECK_FALSE(verdict.simple);
      CHECK(verdict.path.size() == 3);
    } else {
      CHECK(verdict.simple);
    }
    simple += verdict.simple ? 1 : 0;
  }
  CHECK(simple == 4);

  Subcomplex all(square);
  for (int d = 0; d <= square.dimension(); ++d) {
    for (std::size_t g = 0; g < square.size(d); ++g) {
      all.insert(d, g);
    }
  }
  CHECK(is_simple_inclusion(all, square).simple);
}

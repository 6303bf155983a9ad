#include <doctest.h>

#include "rigidify/comonad.hpp"
#include "rigidify/errors.hpp"
#include "rigidify/oracles.hpp"

using namespace rigidify;

TEST_CASE("comonad levels") {
  CHECK(comonad_level(2, 0, 0, 2).count == 2);
  CHECK(comonad_level(3, 1, 0, 3).count == 9);
  CHECK(comonad_level(4, 3, 0, 4).count == 125);
  for (int n = 0; n <= 3; ++n) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      CHECK(comonad_level(n, 2, i, i).count == 1);
    }
  }
  CHECK(comonad_level(3, 1, 2, 1).count == 0);
}

TEST_CASE("chain counts") {
  CHECK(chain_count(0, 0) == 1);
  CHECK(chain_count(0, 3) == 1);
  CHECK(chain_count(1, 0) == 2);
  CHECK(chain_count(2, 1) == 9);
  CHECK(chain_count(2, 2) == 16);
}

TEST_CASE("level zero morphisms are paths of arrows") {
  auto const ms = comonad_morphisms(2, 0, 0, 2);
  REQUIRE(ms.size() == 2);
  for (auto const& m : ms) {
    CHECK(m.source == 0);
    CHECK(m.target == 2);
    CHECK_FALSE(m.steps.empty());
  }
  CHECK(ms[0].to_string() != ms[1].to_string());
}

TEST_CASE("comonad bounds") {
  CHECK_THROWS_AS(comonad_morphisms(5, 0, 0, 1), ContractViolation);
  CHECK_THROWS_AS(comonad_morphisms(2, 4, 0, 1), ContractViolation);
  CHECK_THROWS_AS(comonad_morphisms(2, 0, 0, 3), ContractViolation);
}

TEST_CASE("brute-force chain oracles") {
  CHECK(oracle::weak_chain_count(0, 2) == 1);
  CHECK(oracle::weak_chain_count(1, 0) == 2);
  CHECK(oracle::weak_chain_count(2, 1) == 9);
  CHECK(oracle::weak_chain_count(2, 2) == 16);
  for (int m = 0; m <= 3; ++m) {
    for (int level = 0; level <= 3; ++level) {
      CHECK(oracle::weak_chain_count(m, level) == chain_count(m, level));
    }
  }
  CHECK(oracle::strict_chain_counts(2) == std::vector<std::size_t>{4, 5, 2});
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rigidify {

// A non-identity morphism of (FU)^{level+1}([n]), written out literally.
// At level -1 (the poset [n] itself) `steps` is empty; above it a morphism is
// a nonempty composable path of non-identity morphisms of the level below.
struct PathTerm {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<PathTerm> steps;

  std::string to_string() const;
  auto operator<=>(PathTerm const&) const = default;
};

// All non-identity morphisms i -> j of (FU)^{level+1}([n]).
// Needs n <= 4, 0 <= level <= 3 and i, j <= n; throws ContractViolation.
std::vector<PathTerm> comonad_morphisms(int n, int level, std::size_t i,
                                        std::size_t j);

struct LevelCount {
  int n = 0;
  int level = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t count = 0;
};

// |Hom(i, j)| in (FU)^{level+1}([n]), identity included.
LevelCount comonad_level(int n, int level, std::size_t i, std::size_t j);

// (level + 2)^m: weak chains S⁰ ⊆ ... ⊆ S^level of subsets of an m-set.
std::uint64_t chain_count(int m, int level);

}  // namespace rigidify

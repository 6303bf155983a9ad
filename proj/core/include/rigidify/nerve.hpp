#pragma once

#include <compare>
#include <vector>

#include "rigidify/category.hpp"
#include "rigidify/horn.hpp"

namespace rigidify {

// A simplicial functor 𝔠(Δⁿ) -> D. It is stored by its object map and its
// value on every nondegenerate simplex of every 𝔠(Δⁿ)(i, j), i < j, with
// chains numbered as in necklace_mapping_space(Necklace::simplex(n), i, j).
struct NerveSimplex {
  std::vector<VertexId> objects;
  // values[pair][d][c] for the pair (i, j) at position pair_index(n, i, j).
  std::vector<std::vector<std::vector<SimplexKey>>> values;

  auto operator<=>(NerveSimplex const&) const = default;
};

// Position of (i, j), i < j <= n, in the list ordered by j - i and then i.
std::size_t pair_index(int n, VertexId i, VertexId j);

struct CoherentNerve {
  int nmax = 0;
  // levels[n] sorted.
  std::vector<std::vector<NerveSimplex>> levels;
  // faces[n][x][i] = index of d_i of levels[n][x] in levels[n - 1].
  std::vector<std::vector<std::vector<std::size_t>>> faces;

  std::vector<std::size_t> counts() const;
  SimplicialLevels as_levels() const;
};

// Levels 0..nmax of the homotopy coherent nerve of D, degenerate simplices
// included. Needs 0 <= nmax <= 3; throws ContractViolation otherwise.
CoherentNerve coherent_nerve_truncated(SimplicialCategory const& d, int nmax);

}  // namespace rigidify

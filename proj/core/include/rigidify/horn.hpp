#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "rigidify/complex.hpp"

namespace rigidify {

// A simplicial set truncated at some level, all simplices (degenerate ones
// included) numbered per level, with face tables.
struct SimplicialLevels {
  std::vector<std::size_t> counts;
  // faces[n][x][i] = index of d_i x in level n - 1, for n >= 1.
  std::vector<std::vector<std::vector<std::size_t>>> faces;

  int top() const noexcept { return static_cast<int>(counts.size()) - 1; }

  // Levels 0..dmax of a complex, numbered by Complex::simplices.
  static SimplicialLevels of(Complex const& complex, int dmax);
};

struct HornFailure {
  int n = 0;
  int k = 0;
  // Faces of the horn, with `missing` in position k.
  std::vector<std::size_t> faces;

  static constexpr std::size_t missing = std::numeric_limits<std::size_t>::max();
};

struct HornReport {
  int dmax = 0;
  std::size_t horns_checked = 0;
  std::size_t failure_count = 0;
  // The first few failures.
  std::vector<HornFailure> failures;

  bool ok() const noexcept { return failure_count == 0; }
};

// Tries to fill every inner horn Λⁿₖ -> X with 2 <= n <= dmax.
// Throws ContractViolation unless 2 <= dmax <= min(4, levels.top()).
HornReport inner_horn_check(SimplicialLevels const& levels, int dmax);

inline HornReport inner_horn_check(Complex const& complex, int dmax) {
  return inner_horn_check(SimplicialLevels::of(complex, dmax), dmax);
}

}  // namespace rigidify

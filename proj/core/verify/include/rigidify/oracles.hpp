#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidify/complex.hpp"
#include "rigidify/necklace.hpp"

// Brute-force reference computations. None of these go through the canonical
// form or the mapping-space enumeration of the core library.
namespace rigidify::oracle {

// counts[k] = strict chains A₀ ⊊ ... ⊊ A_k in the subsets of an n-set, by
// walking every pair of bitmasks.
std::vector<std::size_t> strict_chain_counts(int n);

// Weak chains S⁰ ⊆ ... ⊆ S^level in the subsets of an m-set, by listing
// every tuple of bitmasks.
std::uint64_t weak_chain_count(int m, int level);

// Every necklace with 1..max_vertices vertices, shortest first.
std::vector<Necklace> necklaces_up_to(std::size_t max_vertices);

// The necklace as a simplicial set (union of its beads).
OrderedComplex necklace_complex(Necklace const& t);

struct QuotientReport {
  std::size_t triples = 0;
  std::size_t morphisms = 0;
  std::size_t classes = 0;
  std::size_t canonical_values = 0;
  std::size_t space_simplices = 0;
  // Classes mapping to more than one canonical value.
  std::size_t split_classes = 0;
  bool bijective = false;
  std::string detail;
};

// Union-find over all triples (T, T -> S, flag) with |V_T| <= |S₀| and flag
// length <= max_length, glued along every necklace map. The classes are then
// compared with the simplices of mapping_space(S, a, b) of dimension
// <= max_length, degenerate ones included.
QuotientReport quotient_classes(OrderedComplex const& s, int max_length);

struct ZigzagReport {
  std::size_t triples = 0;
  std::size_t members = 0;
  std::size_t mismatches = 0;
  std::size_t not_idempotent = 0;
  std::string detail;
};

// Random flagged triples over S, each pushed through a random zig-zag of up
// to `max_moves` elementary relations (restriction to a subnecklace,
// insertion of a vertex, collapse of a repeated vertex, splitting of a bead).
ZigzagReport random_zigzags(OrderedComplex const& s, std::size_t count,
                            int max_moves, std::uint64_t seed);

}  // namespace rigidify::oracle

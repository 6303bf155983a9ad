#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "rigidify/complex.hpp"
#include "rigidify/necklace.hpp"

namespace rigidify {

// T⁰ ⊆ T¹ ⊆ ... ⊆ Tⁿ over the vertices of one necklace.
using Flag = std::vector<VertexSet>;

// [T, T -> S, flag]. The necklace is the one carried by `map`.
struct FlaggedTriple {
  NecklaceMap map;
  Flag flag;

  Necklace const& necklace() const noexcept { return map.necklace; }
  int length() const noexcept { return static_cast<int>(flag.size()) - 1; }

  auto operator<=>(FlaggedTriple const&) const = default;
};

// Checks nesting and J_T ⊆ T⁰, Tⁿ ⊆ V_T. Throws ContractViolation.
void validate_flag(Necklace const& t, Flag const& flag);

bool is_flanked(FlaggedTriple const& t);

// A simplex of the mapping space 𝔠(S)(a, b): the unique flanked, totally
// nondegenerate representative of its class. Equality is componentwise.
class MappingSimplex {
 public:
  FlaggedTriple const& triple() const noexcept { return triple_; }
  NecklaceMap const& map() const noexcept { return triple_.map; }
  Necklace const& necklace() const noexcept { return triple_.map.necklace; }
  Flag const& flag() const noexcept { return triple_.flag; }
  int dim() const noexcept { return triple_.length(); }
  VertexId source() const { return triple_.map.source(); }
  VertexId target() const { return triple_.map.target(); }

  // True when two consecutive flag entries coincide.
  bool is_degenerate() const;

  auto operator<=>(MappingSimplex const&) const = default;

 private:
  explicit MappingSimplex(FlaggedTriple t) : triple_(std::move(t)) {}

  friend MappingSimplex canonicalize(Complex const& s, FlaggedTriple const& t);
  friend MappingSimplex degeneracy(MappingSimplex const& m, int i);

  FlaggedTriple triple_;
};

// Restricts to the subnecklace with joints T⁰ and vertices Tⁿ.
FlaggedTriple flankify(Complex const& s, FlaggedTriple const& t);

// Flankify, then collapse degenerate beads pushing the flag forward, until
// stable. Throws ContractViolation on a malformed flag.
MappingSimplex canonicalize(Complex const& s, FlaggedTriple const& t);

// Omits Tⁱ and renormalizes. Needs dim() >= 1.
MappingSimplex face(Complex const& s, MappingSimplex const& m, int i);

// Repeats Tⁱ.
MappingSimplex degeneracy(MappingSimplex const& m, int i);

// g ∘ f for f over (a, b) and g over (b, c): wedge of necklaces with
// levelwise union of flags.
MappingSimplex compose(Complex const& s, MappingSimplex const& g,
                       MappingSimplex const& f);

// The identity of `a` as a simplex of dimension `dim` (Δ⁰ with a constant
// flag).
MappingSimplex identity_simplex(Complex const& s, VertexId a, int dim = 0);

// Nerve of the poset C_T(a, b) of subsets of V_T(a, b) containing J_T(a, b),
// that is the mapping space 𝔠(T)(a, b).
struct CubeNerve {
  Necklace necklace;
  VertexId from = 0;
  VertexId to = 0;
  VertexSet bottom;  // J_T(a, b)
  VertexSet top;     // V_T(a, b)
  // Strict chains per dimension, sorted; generator g of dimension d of
  // `complex` is chains[d][g].
  std::vector<std::vector<std::vector<VertexSet>>> chains;
  GeneratedComplex complex;

  // |V_T(a, b) - J_T(a, b)|, or -1 when the space is empty.
  int cube_dimension() const;
  std::optional<std::size_t> find(std::span<VertexSet const> chain) const;
};

CubeNerve necklace_mapping_space(Necklace const& t, VertexId a, VertexId b);

// The face of the cube picked out by required vertices Y, excluded vertices
// N and open vertices M: the chain Y ⊂ Y + m₁ ⊂ ... ⊂ Y ∪ M adding M in
// increasing vertex order.
std::vector<VertexSet> cube_face(Necklace const& t, VertexId a, VertexId b,
                                 VertexSet yes, VertexSet no, VertexSet maybe);

}  // namespace rigidify

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rigidify/complex.hpp"
#include "rigidify/simplex.hpp"

namespace rigidify {

// Subset of the vertices of one necklace, as a 64-bit mask.
class VertexSet {
 public:
  static constexpr std::size_t capacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::span<VertexId const> vertices);
  // {first, first + 1, ..., last}; empty when last < first.
  static VertexSet interval(VertexId first, VertexId last);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  bool contains(VertexId v) const noexcept {
    return v < capacity && ((bits_ >> v) & 1U) != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v) noexcept {
    if (v < capacity) {
      bits_ &= ~(std::uint64_t{1} << v);
    }
  }
  constexpr bool is_subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  std::vector<VertexId> elements() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }

  auto operator<=>(VertexSet const&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Δ^{n_0} ∨ ... ∨ Δ^{n_k} in preferred form: either the single bead [0] or
// all beads of positive dimension. Vertices are 0..Σnᵢ in path order.
class Necklace {
 public:
  // The point necklace Δ⁰.
  Necklace() : beads_{0} {}

  // Throws ContractViolation unless `beads` is in preferred form and has at
  // most 64 vertices.
  explicit Necklace(std::vector<int> beads);

  static Necklace point() { return Necklace(); }
  static Necklace simplex(int n) { return Necklace(std::vector<int>{n}); }

  std::vector<int> const& beads() const noexcept { return beads_; }
  std::size_t bead_count() const noexcept { return beads_.size(); }
  bool is_point() const noexcept { return beads_.front() == 0; }

  std::size_t vertex_count() const noexcept { return starts_.back() + 1; }
  VertexId alpha() const noexcept { return 0; }
  VertexId omega() const noexcept { return vertex_count() - 1; }

  VertexId bead_start(std::size_t bead) const { return starts_.at(bead); }
  VertexId bead_end(std::size_t bead) const { return starts_.at(bead + 1); }

  VertexSet vertices() const { return VertexSet::interval(0, omega()); }
  VertexSet joints() const;

  // V_T(a, b): vertices between a and b inclusive.
  VertexSet vertices_between(VertexId a, VertexId b) const;
  // J_T(a, b): {a, b} together with the joints strictly between them.
  VertexSet joints_between(VertexId a, VertexId b) const;

  // A bead whose vertex range contains [lo, hi] (the earliest one when two
  // beads qualify), if any.
  std::optional<std::size_t> bead_containing(VertexId lo, VertexId hi) const;

  auto operator<=>(Necklace const& other) const {
    return beads_ <=> other.beads_;
  }
  bool operator==(Necklace const& other) const { return beads_ == other.beads_; }

 private:
  std::vector<int> beads_;
  // starts_[i] = first vertex of bead i; starts_.back() = last vertex.
  std::vector<VertexId> starts_{0, 0};
};

// Drops Δ⁰ beads; a list of zeros becomes the point. Vertex numbering is
// unchanged.
Necklace preferred_form(std::vector<int> const& raw);

// A map of necklaces preserving first and last vertex, stored by its vertex
// map (which determines it).
class NecklaceMorphism {
 public:
  // Throws ContractViolation unless the vertex map is monotone, preserves
  // α and ω, and sends every bead of `source` into a single bead of `target`.
  NecklaceMorphism(Necklace source, Necklace target,
                   std::vector<VertexId> vertex_map);

  static NecklaceMorphism identity(Necklace const& t);

  Necklace const& source() const noexcept { return source_; }
  Necklace const& target() const noexcept { return target_; }
  std::vector<VertexId> const& vertex_map() const noexcept { return map_; }
  VertexId operator()(VertexId v) const { return map_.at(v); }

  bool is_surjective() const;
  bool is_injective() const;

  VertexSet image(VertexSet s) const;

  // this ∘ first
  NecklaceMorphism after(NecklaceMorphism const& first) const;

  bool operator==(NecklaceMorphism const&) const = default;

 private:
  Necklace source_;
  Necklace target_;
  std::vector<VertexId> map_;
};

// Result of T ∨ U: the wedge together with the vertex embeddings of both
// factors.
struct Wedge {
  Necklace necklace;
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

Wedge wedge(Necklace const& t, Necklace const& u);

// T ↪ Δ[T].
NecklaceMorphism outer_simplex(Necklace const& t);
// Spi[T] ↪ T.
NecklaceMorphism spine(Necklace const& t);

// A map T -> S. Every bead carries the canonical key of its image; the vertex
// images are kept alongside for ordered targets and for gluing checks.
struct NecklaceMap {
  Necklace necklace;
  std::vector<VertexId> vertices;
  std::vector<SimplexKey> beads;

  VertexId source() const { return vertices.front(); }
  VertexId target() const { return vertices.back(); }

  auto operator<=>(NecklaceMap const&) const = default;
};

// Map into an ordered complex given by vertex images. Throws InvalidInput if
// some bead's image is not a simplex of S.
NecklaceMap make_map(Necklace const& t, OrderedComplex const& s,
                     std::vector<VertexId> const& images);

// Map into any complex given by per-bead simplices. Throws InvalidInput on a
// gluing violation or a missing simplex.
NecklaceMap make_map(Necklace const& t, Complex const& s,
                     std::vector<SimplexKey> const& bead_images);

bool is_totally_nondegenerate(NecklaceMap const& m);
bool is_injective(NecklaceMap const& m);

// m ∘ p for p: T -> U and m: U -> S.
NecklaceMap precompose(Complex const& s, NecklaceMap const& m,
                       NecklaceMorphism const& p);

struct Collapse {
  NecklaceMorphism surjection;  // T ->> T̄
  NecklaceMap map;              // T̄ -> S, totally nondegenerate
};

// Factors m as a totally nondegenerate map after a surjection of necklaces.
Collapse collapse_to_nondegenerate(Complex const& s, NecklaceMap const& m);

// The injective map onto the image of m. Throws NotOrdered if S is not
// ordered.
NecklaceMap image_necklace(Complex const& s, NecklaceMap const& m);

// Every injective map of a necklace into S from a to b, sorted by
// (bead list, vertex images).
std::vector<NecklaceMap> enumerate_injective_maps(OrderedComplex const& s,
                                                  VertexId a, VertexId b);

// The map T ∨ U -> S from f: T -> S_{a,b} and g: U -> S_{b,c}.
NecklaceMap wedge_maps(NecklaceMap const& f, NecklaceMap const& g);

}  // namespace rigidify

#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "rigidify/complex.hpp"
#include "rigidify/mapping.hpp"

namespace rigidify {

// The simplicial set 𝔠(S)(a, b) in explicit form. Generator g of dimension d
// of `complex` is simplices[d][g]; simplices are sorted per dimension.
struct MappingSpace {
  VertexId from = 0;
  VertexId to = 0;
  // Set when a necklace bound cut off part of the enumeration.
  bool truncated = false;
  std::vector<std::vector<MappingSimplex>> simplices;
  GeneratedComplex complex;

  std::vector<std::size_t> f_vector() const { return complex.f_vector(); }
  bool empty() const { return simplices.empty(); }

  std::optional<std::size_t> find(MappingSimplex const& m) const;

  // Key of a possibly degenerate simplex. Throws ContractViolation when the
  // underlying nondegenerate simplex is not in the space.
  SimplexKey encode(MappingSimplex const& m) const;
  MappingSimplex decode(SimplexKey const& key) const;
};

// Assembles the space from the totally nondegenerate maps it is spanned by.
MappingSpace build_mapping_space(Complex const& s, VertexId a, VertexId b,
                                 std::vector<NecklaceMap> const& maps,
                                 bool truncated);

// Full mapping space of an ordered complex.
MappingSpace mapping_space(OrderedComplex const& s, VertexId a, VertexId b);

// Part of 𝔠(S)(a, b) spanned by necklaces with at most `max_vertices`
// vertices. Works for any complex; `truncated` reports whether anything was
// cut off.
MappingSpace mapping_space_bounded(Complex const& s, VertexId a, VertexId b,
                                   std::size_t max_vertices);

// Totally nondegenerate maps a -> b with at most `max_vertices` vertices.
// The flag is set when the bound stopped the search somewhere.
std::vector<NecklaceMap> enumerate_nondegenerate_maps(Complex const& s,
                                                      VertexId a, VertexId b,
                                                      std::size_t max_vertices,
                                                      bool* truncated = nullptr);

// 𝔠(S) for ordered S with its composition tables on generators.
class SimplicialCategory {
 public:
  OrderedComplex const& base() const noexcept { return base_; }
  std::size_t object_count() const noexcept { return base_.vertex_count(); }
  MappingSpace const& hom(VertexId a, VertexId b) const;

  // Index in hom(a, c) of g ∘ f, for generators f of hom(a, b) and g of
  // hom(b, c) of dimension `dim`.
  std::size_t composition(VertexId a, VertexId b, VertexId c, int dim,
                          std::size_t g, std::size_t f) const;

  // g ∘ f on arbitrary simplices of equal dimension.
  SimplexKey compose(VertexId a, VertexId b, VertexId c, SimplexKey const& g,
                     SimplexKey const& f) const;

  // id_a as a simplex of dimension `dim` of hom(a, a).
  SimplexKey identity(VertexId a, int dim = 0) const;

 private:
  friend SimplicialCategory categorify(OrderedComplex const& s);

  OrderedComplex base_;
  std::vector<MappingSpace> homs_;
  std::map<std::array<std::size_t, 4>, std::vector<std::size_t>> table_;
};

// Builds every mapping space and composition table and checks unit and
// associativity on generators; a failure there throws std::logic_error.
SimplicialCategory categorify(OrderedComplex const& s);

// A map of ordered complexes, determined by its vertex map. The complexes
// must outlive it.
class OrderedMap {
 public:
  // Throws InvalidInput if some simplex is not sent to a simplex.
  OrderedMap(OrderedComplex const& source, OrderedComplex const& target,
             std::vector<VertexId> vertex_map);

  OrderedComplex const& source() const noexcept { return *source_; }
  OrderedComplex const& target() const noexcept { return *target_; }
  VertexId operator()(VertexId v) const { return map_.at(v); }
  SimplexKey operator()(SimplexKey const& key) const;

 private:
  OrderedComplex const* source_;
  OrderedComplex const* target_;
  std::vector<VertexId> map_;
};

// 𝔠(f) on one simplex.
MappingSimplex induced_map(OrderedMap const& f, MappingSimplex const& m);

// Images of the generators of a complex, per dimension.
struct ComplexMap {
  std::vector<std::vector<SimplexKey>> images;
};

// 𝔠(f): src -> dst on generators. src must be over (a, b) and dst over
// (f(a), f(b)).
ComplexMap induced_space_map(OrderedMap const& f, MappingSpace const& src,
                             MappingSpace const& dst);

// True when the map commutes with faces, sends generators to generators and
// is bijective in every dimension.
bool is_isomorphism(ComplexMap const& m, Complex const& src, Complex const& dst);

}  // namespace rigidify

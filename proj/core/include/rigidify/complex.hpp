#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigidify/simplex.hpp"

namespace rigidify {

// Read interface shared by every finite simplicial set in the library.
//
// A complex is described by its nondegenerate simplices ("generators"),
// indexed per dimension, together with the faces of each generator as
// canonical SimplexKeys. Degenerate simplices are never stored; they are the
// keys with a nonempty degeneracy word.
class Complex {
 public:
  virtual ~Complex() = default;

  // Highest dimension carrying a generator, or -1 for the empty complex.
  virtual int dimension() const = 0;

  // Number of generators in dimension `dim` (0 outside [0, dimension()]).
  virtual std::size_t size(int dim) const = 0;

  // d_i of the generator, in canonical form.
  virtual SimplexKey generator_face(int dim, std::size_t gen, int i) const = 0;

  // Vertex sequence of the generator (length dim + 1).
  virtual std::vector<VertexId> const& generator_vertices(
      int dim, std::size_t gen) const = 0;

  virtual std::string generator_label(int dim, std::size_t gen) const;

  std::size_t vertex_count() const { return size(0); }

  // Generator counts for dimensions 0..dimension().
  std::vector<std::size_t> f_vector() const;

  // True when `key` refers to an existing generator with a well formed word.
  bool contains(SimplexKey const& key) const;

  // Vertex sequence of a possibly degenerate simplex.
  std::vector<VertexId> vertices(SimplexKey const& key) const;

  SimplexKey face(SimplexKey const& key, int i) const;
  SimplexKey degeneracy(SimplexKey const& key, int i) const;

  // The simplex key∘theta for a monotone map theta: [p] -> [key.dim], given
  // as its list of values.
  SimplexKey restrict(SimplexKey const& key, std::span<int const> theta) const;

  // Every simplex of dimension `dim`, degenerate ones included, in
  // lexicographic key order.
  std::vector<SimplexKey> simplices(int dim) const;
};

// Applies d_i or s_i and renormalizes the result.
SimplexKey apply_operator(Complex const& complex, SimplexKey const& key,
                          Operator op);

// A finite simplicial set given by generators and a face table. Used for
// complexes that are not ordered (quotients such as Δ¹/∂Δ¹) and for computed
// mapping spaces.
class GeneratedComplex final : public Complex {
 public:
  class Builder {
   public:
    std::size_t add_generator(int dim, std::string label = {});
    void set_face(int dim, std::size_t gen, int i, SimplexKey face);
    std::size_t size(int dim) const;

    // Checks totality of the face table and the simplicial identities
    // d_i d_j = d_{j-1} d_i (i < j) on every generator.
    GeneratedComplex build() &&;

   private:
    struct Pending {
      std::string label;
      std::vector<std::optional<SimplexKey>> faces;
    };
    std::vector<std::vector<Pending>> gens_;
  };

  GeneratedComplex() = default;

  int dimension() const override;
  std::size_t size(int dim) const override;
  SimplexKey generator_face(int dim, std::size_t gen, int i) const override;
  std::vector<VertexId> const& generator_vertices(
      int dim, std::size_t gen) const override;
  std::string generator_label(int dim, std::size_t gen) const override;

  // Looks up a generator by its label.
  std::optional<SimplexKey> find_label(std::string const& label) const;

 private:
  struct Generator {
    std::string label;
    std::vector<SimplexKey> faces;
    std::vector<VertexId> vertices;
  };
  std::vector<std::vector<Generator>> gens_;
};

// A simplicial set in which every simplex is determined by its vertex chain.
// Nondegenerate simplices are stored as chains of distinct vertices; faces
// drop one entry. Construction verifies that the reachability preorder is
// antisymmetric.
class OrderedComplex final : public Complex {
 public:
  OrderedComplex() = default;

  // All nonempty subchains of the given chains. Vertices 0..n-1 are always
  // present, where n = max(vertex_count, largest id + 1).
  // Throws NotOrdered with a witness cycle when ⪯ is not antisymmetric.
  static OrderedComplex from_maximal_chains(
      std::vector<std::vector<VertexId>> const& chains,
      std::size_t vertex_count = 0);

  // Reads an arbitrary complex as an ordered one. Generator indices are not
  // preserved. Throws NotOrdered when is_ordered fails.
  static OrderedComplex from_complex(Complex const& complex);

  int dimension() const override;
  std::size_t size(int dim) const override;
  SimplexKey generator_face(int dim, std::size_t gen, int i) const override;
  std::vector<VertexId> const& generator_vertices(
      int dim, std::size_t gen) const override;

  std::vector<VertexId> const& chain(int dim, std::size_t gen) const {
    return generator_vertices(dim, gen);
  }

  // Generator index of a chain of distinct vertices.
  std::optional<std::size_t> find(std::span<VertexId const> chain) const;

  // Key of the simplex with the given vertex sequence; consecutive repeats
  // are read as degeneracies. Empty if no such simplex exists.
  std::optional<SimplexKey> key_for(std::span<VertexId const> sequence) const;

  // Chains not contained in any longer chain, sorted.
  std::vector<std::vector<VertexId>> maximal_chains() const;

  GeneratedComplex to_generated() const;

 private:
  std::vector<std::vector<std::vector<VertexId>>> chains_;
  std::map<std::vector<VertexId>, std::size_t> index_;
};

// Reflexive-transitive closure of the edge relation source -> target.
class PreorderRelation {
 public:
  PreorderRelation() = default;
  explicit PreorderRelation(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t size() const noexcept { return n_; }
  bool related(VertexId x, VertexId y) const { return bits_[x * n_ + y]; }
  void set(VertexId x, VertexId y) { bits_[x * n_ + y] = true; }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  // Re-runs the closure; a closed relation is returned unchanged.
  PreorderRelation closure() const;

  bool operator==(PreorderRelation const&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

PreorderRelation preceq(Complex const& complex);

// Shortest directed edge path from `from` to `to` (inclusive), if any.
std::optional<std::vector<VertexId>> directed_path(Complex const& complex,
                                                   VertexId from, VertexId to);

struct OrderedVerdict {
  bool ordered = true;
  // x0, x1, ..., x0 when antisymmetry fails.
  std::vector<VertexId> cycle;
  // Two distinct simplices with one vertex sequence.
  std::optional<std::pair<SimplexKey, SimplexKey>> clash;
  std::string reason;

  explicit operator bool() const noexcept { return ordered; }
};

OrderedVerdict is_ordered(Complex const& complex);

// Membership set over the generators of an ambient complex.
class Subcomplex {
 public:
  Subcomplex() = default;
  explicit Subcomplex(Complex const& ambient);

  // Smallest face-closed set containing the given simplices' generators.
  static Subcomplex generated_by(Complex const& ambient,
                                 std::vector<SimplexKey> const& simplices);
  static Subcomplex from_chains(
      OrderedComplex const& ambient,
      std::vector<std::vector<VertexId>> const& chains);

  bool contains(int dim, std::size_t gen) const;
  bool contains(SimplexKey const& key) const {
    return contains(key.generator_dim(), key.gen);
  }
  void insert(int dim, std::size_t gen);

  bool is_face_closed(Complex const& ambient) const;

 private:
  std::vector<std::vector<bool>> members_;
};

struct InclusionVerdict {
  bool simple = true;
  std::optional<SimplexKey> offending;
  // Directed path from a vertex of the subcomplex to another one through the
  // offending simplex, when the failure is of path type.
  std::vector<VertexId> path;
  std::string reason;

  explicit operator bool() const noexcept { return simple; }
};

// Decides whether sub ↪ ambient lifts against ∂Δ¹ ↪ T for every necklace T
// using the finite criterion:
//  (a) every edge on a directed path between vertices of sub lies in sub;
//  (b) every generator whose first and last vertices lie in sub lies in sub.
// Throws ContractViolation if sub is not face-closed.
InclusionVerdict is_simple_inclusion(Subcomplex const& sub,
                                     Complex const& ambient);

}  // namespace rigidify

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rigidify {

// Index of a vertex in its owning complex. Vertices are the dimension 0
// generators, so a VertexId doubles as the generator index at dimension 0.
using VertexId = std::size_t;

// A degeneracy operator s_{i_1} s_{i_2} ... s_{i_k} in admissible normal form:
// i_1 > i_2 > ... > i_k. Applied to x it means s_{i_1}(s_{i_2}(...(x))).
//
// Equivalently, the word records the set of positions t of the degenerate
// simplex at which vertex t and vertex t+1 coincide.
class DegeneracyWord {
 public:
  DegeneracyWord() = default;

  // Indices of the repeat positions, in any order; sorted descending.
  // Duplicates and negative indices throw.
  static DegeneracyWord from_indices(std::vector<int> indices);

  // Builds the word of a monotone surjection [n] -> [m] given as its list
  // of values (length n+1, non-decreasing, hitting every value 0..m).
  static DegeneracyWord from_surjection(std::span<int const> values);

  // The monotone surjection [base_dim + length()] -> [base_dim].
  std::vector<int> to_surjection(int base_dim) const;

  std::vector<int> const& indices() const noexcept { return indices_; }
  std::size_t length() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  // "s1s0", or "" for the empty word.
  std::string to_string() const;

  auto operator<=>(DegeneracyWord const&) const = default;

 private:
  explicit DegeneracyWord(std::vector<int> indices)
      : indices_(std::move(indices)) {}

  std::vector<int> indices_;
};

// Canonical reference to a (possibly degenerate) simplex: the Eilenberg-Zilber
// decomposition s_word(gen) with gen nondegenerate of dimension
// dim - word.length().
struct SimplexKey {
  int dim = 0;
  std::size_t gen = 0;
  DegeneracyWord word;

  int generator_dim() const noexcept {
    return dim - static_cast<int>(word.length());
  }
  bool is_degenerate() const noexcept { return !word.empty(); }

  static SimplexKey nondegenerate(int dim, std::size_t gen) {
    return SimplexKey{dim, gen, {}};
  }
  static SimplexKey vertex(VertexId v) { return SimplexKey{0, v, {}}; }

  auto operator<=>(SimplexKey const&) const = default;
};

// One of the elementary simplicial operators d_i or s_i.
struct Operator {
  enum class Kind : std::uint8_t { face, degeneracy };
  Kind kind = Kind::face;
  int index = 0;

  static constexpr Operator face(int i) { return {Kind::face, i}; }
  static constexpr Operator degeneracy(int i) { return {Kind::degeneracy, i}; }

  auto operator<=>(Operator const&) const = default;
};

// Checks that `values` is a non-decreasing surjection onto [0, max].
bool is_monotone_surjection(std::span<int const> values);

}  // namespace rigidify

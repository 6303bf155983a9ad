#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidify/complex.hpp"

namespace rigidify {

// Dense integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  // Throws std::overflow_error.
  IntMatrix operator*(IntMatrix const& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Nonzero diagonal of the Smith normal form, each dividing the next.
struct SmithForm {
  std::vector<std::int64_t> invariants;
  std::size_t rank() const noexcept { return invariants.size(); }
};

// Exact over the integers; throws std::overflow_error if an intermediate
// entry leaves int64.
SmithForm smith_normal_form(IntMatrix m);

// Normalized chains: generators only, degenerate faces dropped.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  // boundaries[d] : C_d -> C_{d-1}, rows indexed by (d-1)-generators;
  // boundaries[0] is the zero map to nothing.
  std::vector<IntMatrix> boundaries;

  static ChainComplex normalized(Complex const& complex);

  // ∂∂ = 0 in every degree.
  bool squares_to_zero() const;
};

struct HomologyGroup {
  int dim = 0;
  std::size_t betti = 0;
  std::vector<std::int64_t> torsion;

  bool operator==(HomologyGroup const&) const = default;
};

struct Homology {
  std::vector<HomologyGroup> groups;

  // H_0 = Z and everything else vanishes. False for the empty complex.
  bool is_point() const;
  // Reduced homology equals that of S^k.
  bool is_sphere(int k) const;
  // "Z, 0, Z/2" style.
  std::string to_string() const;
};

// Groups H_0..H_dmax (dmax < 0 means up to the dimension of the complex).
// Throws std::logic_error if ∂∂ != 0.
Homology homology(Complex const& complex, int dmax = -1);

struct Components {
  std::size_t count = 0;
  // Component of each vertex, numbered by first appearance.
  std::vector<std::size_t> component_of;
};

Components pi0(Complex const& complex);

// Nonempty, connected and with vanishing reduced homology.
bool is_homology_point(Complex const& complex);

}  // namespace rigidify

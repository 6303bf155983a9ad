#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rigidify/complex.hpp"

namespace rigidify {

using AnyComplex = std::variant<OrderedComplex, GeneratedComplex>;

Complex const& as_complex(AnyComplex const& c);

// Named fixtures:
//   "simplex" n        Δⁿ
//   "boundary" n       ∂Δⁿ (n >= 1)
//   "horn" n k         Λⁿₖ (n >= 2, 0 <= k <= n)
//   "two_triangles"    Δ² ∐_{Δ¹} Δ² glued along the edge 1 -> 2
//   "loop"             Δ¹/∂Δ¹ (generated, not ordered)
//   "parallel_edges"   two distinct edges 0 -> 1 (generated, not ordered)
// Throws InvalidInput on an unknown name or bad parameters.
AnyComplex standard(std::string const& name, std::vector<int> const& params = {});

// Same, but requires the fixture to be ordered.
OrderedComplex standard_ordered(std::string const& name,
                                std::vector<int> const& params = {});

// Categorical product. Vertex (x, y) gets id x * |Y₀| + y.
OrderedComplex product(OrderedComplex const& x, OrderedComplex const& y);

}  // namespace rigidify

#include "rigidify/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rigidify {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in Smith normal form");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in Smith normal form");
  }
  return out;
}

std::int64_t magnitude(std::int64_t x) {
  if (x == INT64_MIN) {
    throw std::overflow_error("integer overflow in Smith normal form");
  }
  return x < 0 ? -x : x;
}

}  // namespace

IntMatrix IntMatrix::operator*(IntMatrix const& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix shapes do not match");
  }
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t const a = (*this)(r, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t c = 0; c < other.cols_; ++c) {
        out(r, c) = checked_add(out(r, c), checked_mul(a, other(k, c)));
      }
    }
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

SmithForm smith_normal_form(IntMatrix m) {
  std::size_t const rows = m.rows();
  std::size_t const cols = m.cols();
  SmithForm out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the remaining block as pivot.
    std::size_t pr = rows;
    std::size_t pc = cols;
    std::int64_t best = 0;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        std::int64_t const v = magnitude(m(r, c));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
          if (best == 1) {
            break;
          }
        }
      }
      if (best == 1) {
        break;
      }
    }
    if (best == 0) {
      break;
    }
    if (pr != t) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::swap(m(pr, c), m(t, c));
      }
    }
    if (pc != t) {
      for (std::size_t r = 0; r < rows; ++r) {
        std::swap(m(r, pc), m(r, t));
      }
    }

    bool clean = false;
    while (!clean) {
      clean = true;
      std::int64_t const p = m(t, t);
      for (std::size_t r = t + 1; r < rows; ++r) {
        std::int64_t const q = m(r, t) / p;
        if (q != 0) {
          for (std::size_t c = t; c < cols; ++c) {
            m(r, c) = checked_add(m(r, c), -checked_mul(q, m(t, c)));
          }
        }
        if (m(r, t) != 0) {
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        std::int64_t const q = m(t, c) / p;
        if (q != 0) {
          for (std::size_t r = t; r < rows; ++r) {
            m(r, c) = checked_add(m(r, c), -checked_mul(q, m(r, t)));
          }
        }
        if (m(t, c) != 0) {
          clean = false;
        }
      }
      if (!clean) {
        // A remainder smaller than the pivot: move it into pivot position.
        std::size_t br = t;
        std::size_t bc = t;
        std::int64_t small = magnitude(p);
        for (std::size_t r = t + 1; r < rows; ++r) {
          std::int64_t const v = magnitude(m(r, t));
          if (v != 0 && v < small) {
            small = v;
            br = r;
            bc = t;
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          std::int64_t const v = magnitude(m(t, c));
          if (v != 0 && v < small) {
            small = v;
            br = t;
            bc = c;
          }
        }
        if (br != t) {
          for (std::size_t c = 0; c < cols; ++c) {
            std::swap(m(br, c), m(t, c));
          }
        }
        if (bc != t) {
          for (std::size_t r = 0; r < rows; ++r) {
            std::swap(m(r, bc), m(r, t));
          }
        }
        continue;
      }
      // Divisibility: fold a row with an entry not divisible by the pivot.
      for (std::size_t r = t + 1; r < rows && clean; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(r, c) % p != 0) {
            for (std::size_t k = t; k < cols; ++k) {
              m(t, k) = checked_add(m(t, k), m(r, k));
            }
            clean = false;
            break;
          }
        }
      }
    }
    out.invariants.push_back(magnitude(m(t, t)));
    ++t;
  }
  return out;
}

ChainComplex ChainComplex::normalized(Complex const& complex) {
  ChainComplex out;
  int const top = complex.dimension();
  for (int d = 0; d <= top; ++d) {
    out.ranks.push_back(complex.size(d));
  }
  out.boundaries.emplace_back(0, top >= 0 ? complex.size(0) : 0);
  for (int d = 1; d <= top; ++d) {
    IntMatrix m(complex.size(d - 1), complex.size(d));
    for (std::size_t g = 0; g < complex.size(d); ++g) {
      for (int i = 0; i <= d; ++i) {
        auto const f = complex.generator_face(d, g, i);
        if (!f.is_degenerate()) {
          m(f.gen, g) += (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    out.boundaries.push_back(std::move(m));
  }
  return out;
}

bool ChainComplex::squares_to_zero() const {
  for (std::size_t d = 2; d < boundaries.size(); ++d) {
    if (!(boundaries[d - 1] * boundaries[d]).is_zero()) {
      return false;
    }
  }
  return true;
}

bool Homology::is_point() const {
  if (groups.empty()) {
    return false;
  }
  for (auto const& g : groups) {
    std::size_t const expected = g.dim == 0 ? 1 : 0;
    if (g.betti != expected || !g.torsion.empty()) {
      return false;
    }
  }
  return true;
}

bool Homology::is_sphere(int k) const {
  if (groups.empty()) {
    return false;
  }
  for (auto const& g : groups) {
    std::size_t expected = g.dim == 0 ? 1 : 0;
    if (g.dim == k) {
      expected += 1;
    }
    if (g.betti != expected || !g.torsion.empty()) {
      return false;
    }
  }
  return true;
}

std::string Homology::to_string() const {
  std::string out;
  for (auto const& g : groups) {
    if (!out.empty()) {
      out += ", ";
    }
    std::string term;
    if (g.betti == 1) {
      term = "Z";
    } else if (g.betti > 1) {
      term = "Z^" + std::to_string(g.betti);
    }
    for (auto t : g.torsion) {
      term += (term.empty() ? "" : "+") + ("Z/" + std::to_string(t));
    }
    out += term.empty() ? "0" : term;
  }
  return out;
}

Homology homology(Complex const& complex, int dmax) {
  auto const chains = ChainComplex::normalized(complex);
  if (!chains.squares_to_zero()) {
    throw std::logic_error("boundary does not square to zero");
  }
  int const top = complex.dimension();
  if (dmax < 0) {
    dmax = top;
  }
  std::vector<SmithForm> forms;
  for (auto const& m : chains.boundaries) {
    forms.push_back(smith_normal_form(m));
  }
  Homology out;
  for (int d = 0; d <= dmax; ++d) {
    HomologyGroup g;
    g.dim = d;
    if (d <= top) {
      std::size_t const n = chains.ranks[static_cast<std::size_t>(d)];
      std::size_t const in = forms[static_cast<std::size_t>(d)].rank();
      std::size_t out_rank = 0;
      if (d + 1 <= top) {
        auto const& next = forms[static_cast<std::size_t>(d) + 1];
        out_rank = next.rank();
        for (auto v : next.invariants) {
          if (v > 1) {
            g.torsion.push_back(v);
          }
        }
      }
      g.betti = n - in - out_rank;
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

Components pi0(Complex const& complex) {
  std::size_t const n = complex.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  if (complex.dimension() >= 1) {
    for (std::size_t g = 0; g < complex.size(1); ++g) {
      auto const& v = complex.generator_vertices(1, g);
      parent[root(v[0])] = root(v[1]);
    }
  }
  Components out;
  out.component_of.assign(n, 0);
  std::vector<std::size_t> label(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t const r = root(v);
    if (label[r] == n) {
      label[r] = out.count++;
    }
    out.component_of[v] = label[r];
  }
  return out;
}

bool is_homology_point(Complex const& complex) {
  if (complex.vertex_count() == 0) {
    return false;
  }
  return pi0(complex).count == 1 && homology(complex).is_point();
}

}  // namespace rigidify

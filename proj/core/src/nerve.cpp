#include "rigidify/nerve.hpp"

#include <algorithm>
#include <map>

#include "rigidify/errors.hpp"

namespace rigidify {

std::size_t pair_index(int n, VertexId i, VertexId j) {
  if (i >= j || j > static_cast<VertexId>(n)) {
    throw ContractViolation("pair_index needs i < j <= n");
  }
  std::size_t const gap = j - i;
  std::size_t out = 0;
  for (std::size_t g = 1; g < gap; ++g) {
    out += static_cast<std::size_t>(n) + 1 - g;
  }
  return out + i;
}

std::vector<std::size_t> CoherentNerve::counts() const {
  std::vector<std::size_t> out;
  for (auto const& level : levels) {
    out.push_back(level.size());
  }
  return out;
}

SimplicialLevels CoherentNerve::as_levels() const {
  SimplicialLevels out;
  out.counts = counts();
  out.faces = faces;
  return out;
}

namespace {

struct Builder {
  SimplicialCategory const& cat;
  // cubes[n][pair]
  std::vector<std::vector<CubeNerve>> cubes;
  std::map<std::array<std::size_t, 3>, std::vector<SimplexKey>> candidates;

  std::vector<SimplexKey> const& simplices_of(VertexId x, VertexId y, int d) {
    std::array<std::size_t, 3> const key{x, y, static_cast<std::size_t>(d)};
    auto it = candidates.find(key);
    if (it == candidates.end()) {
      it = candidates.emplace(key, cat.hom(x, y).complex.simplices(d)).first;
    }
    return it->second;
  }

  // Value of F on a chain (repeats allowed) of 𝔠(Δⁿ)(i, j).
  SimplexKey evaluate(int n, NerveSimplex const& f, VertexId i, VertexId j,
                      std::vector<VertexSet> const& chain) {
    int const dim = static_cast<int>(chain.size()) - 1;
    if (i == j) {
      return cat.identity(f.objects[i], dim);
    }
    std::vector<VertexSet> strict = chain;
    strict.erase(std::unique(strict.begin(), strict.end()), strict.end());
    if (strict.size() != chain.size()) {
      std::vector<int> repeats;
      for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
        if (chain[t] == chain[t + 1]) {
          repeats.push_back(static_cast<int>(t));
        }
      }
      SimplexKey key = evaluate(n, f, i, j, strict);
      auto const& space = cat.hom(f.objects[i], f.objects[j]).complex;
      for (int t : repeats) {
        key = space.degeneracy(key, t);
      }
      return key;
    }
    VertexSet interior = strict.front();
    interior.erase(i);
    interior.erase(j);
    if (!interior.empty()) {
      VertexId const t = interior.elements().front();
      std::vector<VertexSet> left;
      std::vector<VertexSet> right;
      for (auto const& s : strict) {
        left.push_back(s & VertexSet::interval(i, t));
        right.push_back(s & VertexSet::interval(t, j));
      }
      auto const lv = evaluate(n, f, i, t, left);
      auto const rv = evaluate(n, f, t, j, right);
      return cat.compose(f.objects[i], f.objects[t], f.objects[j], rv, lv);
    }
    std::size_t const p = pair_index(n, i, j);
    auto const idx = *cubes[static_cast<std::size_t>(n)][p].find(strict);
    return f.values[p][static_cast<std::size_t>(dim)][idx];
  }

  struct Item {
    std::size_t pair;
    VertexId i;
    VertexId j;
    int dim;
    std::size_t chain;
  };

  std::vector<NerveSimplex> level(int n) {
    auto const un = static_cast<std::size_t>(n);
    std::vector<Item> items;
    for (std::size_t gap = 1; gap <= un; ++gap) {
      for (VertexId i = 0; i + gap <= un; ++i) {
        VertexId const j = i + gap;
        std::size_t const p = pair_index(n, i, j);
        auto const& cube = cubes[un][p];
        for (std::size_t d = 0; d < cube.chains.size(); ++d) {
          for (std::size_t c = 0; c < cube.chains[d].size(); ++c) {
            items.push_back(Item{p, i, j, static_cast<int>(d), c});
          }
        }
      }
    }

    std::vector<NerveSimplex> out;
    NerveSimplex f;
    f.objects.assign(un + 1, 0);
    f.values.resize(cubes[un].size());
    for (std::size_t p = 0; p < cubes[un].size(); ++p) {
      f.values[p].resize(cubes[un][p].chains.size());
      for (std::size_t d = 0; d < cubes[un][p].chains.size(); ++d) {
        f.values[p][d].resize(cubes[un][p].chains[d].size());
      }
    }

    auto fill = [&](auto&& self, std::size_t at) -> void {
      if (at == items.size()) {
        out.push_back(f);
        return;
      }
      Item const& item = items[at];
      auto const& chain = cubes[un][item.pair].chains[static_cast<std::size_t>(item.dim)][item.chain];
      auto& slot = f.values[item.pair][static_cast<std::size_t>(item.dim)][item.chain];
      VertexSet interior = chain.front();
      interior.erase(item.i);
      interior.erase(item.j);
      if (!interior.empty()) {
        slot = evaluate(n, f, item.i, item.j, chain);
        self(self, at + 1);
        return;
      }
      std::vector<SimplexKey> required;
      for (int k = 0; k <= item.dim && item.dim > 0; ++k) {
        auto face = chain;
        face.erase(face.begin() + k);
        required.push_back(evaluate(n, f, item.i, item.j, face));
      }
      VertexId const x = f.objects[item.i];
      VertexId const y = f.objects[item.j];
      auto const& space = cat.hom(x, y).complex;
      for (auto const& candidate : simplices_of(x, y, item.dim)) {
        bool match = true;
        for (int k = 0; k < static_cast<int>(required.size()) && match; ++k) {
          match = space.face(candidate, k) == required[static_cast<std::size_t>(k)];
        }
        if (match) {
          slot = candidate;
          self(self, at + 1);
        }
      }
    };

    std::size_t const objects = cat.object_count();
    auto choose = [&](auto&& self, std::size_t pos) -> void {
      if (pos == un + 1) {
        fill(fill, 0);
        return;
      }
      for (VertexId x = 0; x < objects; ++x) {
        bool ok = true;
        for (std::size_t q = 0; q < pos && ok; ++q) {
          ok = !cat.hom(f.objects[q], x).empty();
        }
        if (ok) {
          f.objects[pos] = x;
          self(self, pos + 1);
        }
      }
    };
    choose(choose, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  // d_k of a level-n simplex.
  NerveSimplex face_of(int n, NerveSimplex const& f, int k) {
    auto const un = static_cast<std::size_t>(n);
    auto delta = [k](VertexId v) { return v < static_cast<VertexId>(k) ? v : v + 1; };
    NerveSimplex out;
    for (VertexId v = 0; v < un; ++v) {
      out.objects.push_back(f.objects[delta(v)]);
    }
    auto const& lower = cubes[un - 1];
    out.values.resize(lower.size());
    for (std::size_t gap = 1; gap < un; ++gap) {
      for (VertexId i = 0; i + gap < un; ++i) {
        VertexId const j = i + gap;
        std::size_t const p = pair_index(n - 1, i, j);
        auto const& cube = lower[p];
        out.values[p].resize(cube.chains.size());
        for (std::size_t d = 0; d < cube.chains.size(); ++d) {
          for (auto const& chain : cube.chains[d]) {
            std::vector<VertexSet> moved;
            for (auto const& s : chain) {
              VertexSet m;
              for (VertexId v : s.elements()) {
                m.insert(delta(v));
              }
              moved.push_back(m);
            }
            out.values[p][d].push_back(evaluate(n, f, delta(i), delta(j), moved));
          }
        }
      }
    }
    return out;
  }
};

}  // namespace

CoherentNerve coherent_nerve_truncated(SimplicialCategory const& d, int nmax) {
  if (nmax < 0 || nmax > 3) {
    throw ContractViolation("coherent nerve is computed up to level 3");
  }
  Builder b{d, {}, {}};
  for (int n = 0; n <= nmax; ++n) {
    auto& level = b.cubes.emplace_back();
    auto const t = Necklace::simplex(n);
    for (std::size_t gap = 1; gap <= static_cast<std::size_t>(n); ++gap) {
      for (VertexId i = 0; i + gap <= static_cast<std::size_t>(n); ++i) {
        level.push_back(necklace_mapping_space(t, i, i + gap));
      }
    }
  }
  CoherentNerve out;
  out.nmax = nmax;
  for (int n = 0; n <= nmax; ++n) {
    out.levels.push_back(b.level(n));
    auto& table = out.faces.emplace_back();
    if (n == 0) {
      continue;
    }
    auto const& below = out.levels[static_cast<std::size_t>(n) - 1];
    for (auto const& f : out.levels.back()) {
      auto& row = table.emplace_back();
      for (int k = 0; k <= n; ++k) {
        auto const face = b.face_of(n, f, k);
        auto it = std::lower_bound(below.begin(), below.end(), face);
        if (it == below.end() || *it != face) {
          throw std::logic_error("face of a nerve simplex is missing a level below");
        }
        row.push_back(static_cast<std::size_t>(it - below.begin()));
      }
    }
  }
  return out;
}

}  // namespace rigidify

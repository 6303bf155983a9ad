#include "rigidify/category.hpp"

#include <algorithm>
#include <set>

#include "rigidify/errors.hpp"

namespace rigidify {

namespace {

// Strict flags J = F0 ⊊ F1 ⊊ ... ⊊ Fk = V.
void strict_flags(VertexSet bottom, VertexSet top,
                  std::vector<std::vector<VertexSet>>& out) {
  auto const free = (top - bottom).elements();
  std::size_t const n = free.size();
  std::vector<VertexSet> cur{bottom};
  auto grow = [&](auto&& self, std::uint32_t used) -> void {
    std::uint32_t const rest = ((1U << n) - 1) & ~used;
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t add = rest; add != 0; add = (add - 1) & rest) {
      VertexSet next = cur.back();
      for (std::size_t k = 0; k < n; ++k) {
        if (add & (1U << k)) {
          next.insert(free[k]);
        }
      }
      cur.push_back(next);
      self(self, used | add);
      cur.pop_back();
    }
  };
  grow(grow, 0);
}

std::string flag_label(MappingSimplex const& m) {
  std::string out;
  for (int b : m.necklace().beads()) {
    out += (out.empty() ? "[" : ",") + std::to_string(b);
  }
  out += "](";
  for (std::size_t i = 0; i < m.map().vertices.size(); ++i) {
    out += (i ? "," : "") + std::to_string(m.map().vertices[i]);
  }
  out += ")";
  for (std::size_t i = 0; i < m.flag().size(); ++i) {
    out += i ? "<{" : " {";
    bool first = true;
    for (VertexId v : m.flag()[i].elements()) {
      out += (first ? "" : ",") + std::to_string(m.map().vertices[v]);
      first = false;
    }
    out += "}";
  }
  return out;
}

std::optional<std::size_t> locate(
    std::vector<std::vector<MappingSimplex>> const& simplices,
    FlaggedTriple const& t) {
  auto const d = static_cast<std::size_t>(t.length());
  if (d >= simplices.size()) {
    return std::nullopt;
  }
  auto const& level = simplices[d];
  auto it = std::lower_bound(
      level.begin(), level.end(), t,
      [](MappingSimplex const& x, FlaggedTriple const& y) { return x.triple() < y; });
  if (it == level.end() || it->triple() != t) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - level.begin());
}

}  // namespace

std::optional<std::size_t> MappingSpace::find(MappingSimplex const& m) const {
  return locate(simplices, m.triple());
}

SimplexKey MappingSpace::encode(MappingSimplex const& m) const {
  FlaggedTriple base = m.triple();
  std::vector<int> repeats;
  for (std::size_t i = 0; i + 1 < m.flag().size(); ++i) {
    if (m.flag()[i] == m.flag()[i + 1]) {
      repeats.push_back(static_cast<int>(i));
    }
  }
  base.flag.erase(std::unique(base.flag.begin(), base.flag.end()), base.flag.end());
  auto const idx = locate(simplices, base);
  if (!idx) {
    throw ContractViolation("simplex is not in this mapping space");
  }
  return SimplexKey{m.dim(), *idx, DegeneracyWord::from_indices(std::move(repeats))};
}

MappingSimplex MappingSpace::decode(SimplexKey const& key) const {
  auto const d = static_cast<std::size_t>(key.generator_dim());
  if (d >= simplices.size() || key.gen >= simplices[d].size()) {
    throw ContractViolation("key is not in this mapping space");
  }
  MappingSimplex out = simplices[d][key.gen];
  auto const& idx = key.word.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    out = degeneracy(out, *it);
  }
  return out;
}

MappingSpace build_mapping_space(Complex const& s, VertexId a, VertexId b,
                                 std::vector<NecklaceMap> const& maps,
                                 bool truncated) {
  MappingSpace out;
  out.from = a;
  out.to = b;
  out.truncated = truncated;
  for (auto const& m : maps) {
    std::vector<std::vector<VertexSet>> flags;
    strict_flags(m.necklace.joints(), m.necklace.vertices(), flags);
    for (auto& f : flags) {
      auto simplex = canonicalize(s, FlaggedTriple{m, std::move(f)});
      auto const d = static_cast<std::size_t>(simplex.dim());
      if (out.simplices.size() <= d) {
        out.simplices.resize(d + 1);
      }
      out.simplices[d].push_back(std::move(simplex));
    }
  }
  for (auto& level : out.simplices) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }

  GeneratedComplex::Builder builder;
  for (std::size_t d = 0; d < out.simplices.size(); ++d) {
    for (auto const& m : out.simplices[d]) {
      builder.add_generator(static_cast<int>(d), flag_label(m));
    }
  }
  for (std::size_t d = 1; d < out.simplices.size(); ++d) {
    for (std::size_t g = 0; g < out.simplices[d].size(); ++g) {
      for (int i = 0; i <= static_cast<int>(d); ++i) {
        auto const f = face(s, out.simplices[d][g], i);
        builder.set_face(static_cast<int>(d), g, i, out.encode(f));
      }
    }
  }
  out.complex = std::move(builder).build();
  return out;
}

MappingSpace mapping_space(OrderedComplex const& s, VertexId a, VertexId b) {
  if (a >= s.vertex_count() || b >= s.vertex_count()) {
    throw ContractViolation("endpoint is not a vertex");
  }
  return build_mapping_space(s, a, b, enumerate_injective_maps(s, a, b), false);
}

std::vector<NecklaceMap> enumerate_nondegenerate_maps(Complex const& s,
                                                      VertexId a, VertexId b,
                                                      std::size_t max_vertices,
                                                      bool* truncated) {
  if (a >= s.vertex_count() || b >= s.vertex_count()) {
    throw ContractViolation("endpoint is not a vertex");
  }
  if (max_vertices == 0 || max_vertices > VertexSet::capacity) {
    throw ContractViolation("vertex bound must lie in [1, 64]");
  }
  // Generators of positive dimension grouped by first vertex.
  std::vector<std::vector<SimplexKey>> starting(s.vertex_count());
  for (int d = 1; d <= s.dimension(); ++d) {
    for (std::size_t g = 0; g < s.size(d); ++g) {
      starting[s.generator_vertices(d, g).front()].push_back(
          SimplexKey::nondegenerate(d, g));
    }
  }
  std::vector<NecklaceMap> out;
  bool cut = false;
  if (a == b) {
    out.push_back(NecklaceMap{Necklace::point(), {a}, {SimplexKey::vertex(a)}});
  }
  std::vector<int> beads;
  std::vector<SimplexKey> keys;
  std::vector<VertexId> verts{a};
  auto walk = [&](auto&& self, VertexId at) -> void {
    for (auto const& key : starting[at]) {
      auto const& kv = s.generator_vertices(key.dim, key.gen);
      if (verts.size() + static_cast<std::size_t>(key.dim) > max_vertices) {
        cut = true;
        continue;
      }
      beads.push_back(key.dim);
      keys.push_back(key);
      verts.insert(verts.end(), kv.begin() + 1, kv.end());
      if (kv.back() == b) {
        out.push_back(NecklaceMap{Necklace(beads), verts, keys});
      }
      self(self, kv.back());
      verts.resize(verts.size() - static_cast<std::size_t>(key.dim));
      keys.pop_back();
      beads.pop_back();
    }
  };
  walk(walk, a);
  std::sort(out.begin(), out.end());
  if (truncated != nullptr) {
    *truncated = cut;
  }
  return out;
}

MappingSpace mapping_space_bounded(Complex const& s, VertexId a, VertexId b,
                                   std::size_t max_vertices) {
  bool cut = false;
  auto maps = enumerate_nondegenerate_maps(s, a, b, max_vertices, &cut);
  return build_mapping_space(s, a, b, maps, cut);
}

// ---------------------------------------------------------------------------
// SimplicialCategory

MappingSpace const& SimplicialCategory::hom(VertexId a, VertexId b) const {
  std::size_t const n = object_count();
  if (a >= n || b >= n) {
    throw ContractViolation("object out of range");
  }
  return homs_[a * n + b];
}

std::size_t SimplicialCategory::composition(VertexId a, VertexId b, VertexId c,
                                            int dim, std::size_t g,
                                            std::size_t f) const {
  auto it = table_.find({a, b, c, static_cast<std::size_t>(dim)});
  auto const& fs = hom(a, b);
  if (it == table_.end() || dim < 0 ||
      static_cast<std::size_t>(dim) >= fs.simplices.size() ||
      f >= fs.simplices[static_cast<std::size_t>(dim)].size()) {
    throw ContractViolation("no such composable pair");
  }
  std::size_t const width = fs.simplices[static_cast<std::size_t>(dim)].size();
  std::size_t const pos = g * width + f;
  if (pos >= it->second.size()) {
    throw ContractViolation("no such composable pair");
  }
  return it->second[pos];
}

SimplexKey SimplicialCategory::compose(VertexId a, VertexId b, VertexId c,
                                       SimplexKey const& g,
                                       SimplexKey const& f) const {
  auto const left = hom(a, b).decode(f);
  auto const right = hom(b, c).decode(g);
  return hom(a, c).encode(rigidify::compose(base_, right, left));
}

SimplexKey SimplicialCategory::identity(VertexId a, int dim) const {
  return hom(a, a).encode(identity_simplex(base_, a, dim));
}

SimplicialCategory categorify(OrderedComplex const& s) {
  SimplicialCategory cat;
  cat.base_ = s;
  std::size_t const n = s.vertex_count();
  auto const rel = preceq(s);
  cat.homs_.reserve(n * n);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      cat.homs_.push_back(mapping_space(cat.base_, a, b));
    }
  }
  auto fail = [](std::string const& what) {
    throw std::logic_error("categorify: " + what);
  };

  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (!rel.related(a, b)) {
        continue;
      }
      for (VertexId c = 0; c < n; ++c) {
        if (!rel.related(b, c)) {
          continue;
        }
        auto const& fs = cat.hom(a, b).simplices;
        auto const& gs = cat.hom(b, c).simplices;
        std::size_t const top = std::min(fs.size(), gs.size());
        for (std::size_t d = 0; d < top; ++d) {
          std::vector<std::size_t> row;
          row.reserve(gs[d].size() * fs[d].size());
          for (auto const& g : gs[d]) {
            for (auto const& f : fs[d]) {
              auto const h = compose(cat.base_, g, f);
              auto const idx = cat.hom(a, c).find(h);
              if (!idx) {
                fail("composite of generators is not a generator");
              }
              row.push_back(*idx);
            }
          }
          cat.table_.emplace(std::array<std::size_t, 4>{a, b, c, d}, std::move(row));
        }
      }
    }
  }

  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      auto const& space = cat.hom(a, b).simplices;
      for (std::size_t d = 0; d < space.size(); ++d) {
        auto const ida = identity_simplex(cat.base_, a, static_cast<int>(d));
        auto const idb = identity_simplex(cat.base_, b, static_cast<int>(d));
        for (auto const& f : space[d]) {
          if (compose(cat.base_, f, ida) != f || compose(cat.base_, idb, f) != f) {
            fail("unit law fails");
          }
        }
      }
    }
  }

  for (auto const& [key, row] : cat.table_) {
    auto const [a, b, c, d] = key;
    for (VertexId e = 0; e < n; ++e) {
      auto next = cat.table_.find({b, c, e, d});
      auto outer = cat.table_.find({a, c, e, d});
      if (next == cat.table_.end() || outer == cat.table_.end()) {
        continue;
      }
      auto const& first = cat.table_.at({a, b, e, d});
      std::size_t const nf = cat.hom(a, b).simplices[d].size();
      std::size_t const ng = cat.hom(b, c).simplices[d].size();
      std::size_t const nh = cat.hom(c, e).simplices[d].size();
      std::size_t const nac = cat.hom(a, c).simplices[d].size();
      std::size_t const nbe_width = ng;
      for (std::size_t h = 0; h < nh; ++h) {
        for (std::size_t g = 0; g < ng; ++g) {
          std::size_t const hg = next->second[h * nbe_width + g];
          for (std::size_t f = 0; f < nf; ++f) {
            std::size_t const gf = row[g * nf + f];
            if (outer->second[h * nac + gf] != first[hg * nf + f]) {
              fail("associativity fails");
            }
          }
        }
      }
    }
  }
  return cat;
}

// ---------------------------------------------------------------------------
// Functoriality

OrderedMap::OrderedMap(OrderedComplex const& source, OrderedComplex const& target,
                       std::vector<VertexId> vertex_map)
    : source_(&source), target_(&target), map_(std::move(vertex_map)) {
  if (map_.size() != source.vertex_count()) {
    throw InvalidInput("vertex map has the wrong length");
  }
  for (VertexId v : map_) {
    if (v >= target.vertex_count()) {
      throw InvalidInput("vertex map leaves the target");
    }
  }
  for (auto const& chain : source.maximal_chains()) {
    std::vector<VertexId> image;
    for (VertexId v : chain) {
      image.push_back(map_[v]);
    }
    if (!target.key_for(image)) {
      throw InvalidInput("vertex map does not send simplices to simplices");
    }
  }
}

SimplexKey OrderedMap::operator()(SimplexKey const& key) const {
  std::vector<VertexId> image;
  for (VertexId v : source_->vertices(key)) {
    image.push_back(map_[v]);
  }
  return *target_->key_for(image);
}

MappingSimplex induced_map(OrderedMap const& f, MappingSimplex const& m) {
  std::vector<VertexId> images;
  for (VertexId v : m.map().vertices) {
    images.push_back(f(v));
  }
  auto moved = make_map(m.necklace(), f.target(), images);
  return canonicalize(f.target(), FlaggedTriple{std::move(moved), m.flag()});
}

ComplexMap induced_space_map(OrderedMap const& f, MappingSpace const& src,
                             MappingSpace const& dst) {
  if (f(src.from) != dst.from || f(src.to) != dst.to) {
    throw ContractViolation("target mapping space has the wrong endpoints");
  }
  ComplexMap out;
  for (auto const& level : src.simplices) {
    auto& images = out.images.emplace_back();
    for (auto const& m : level) {
      images.push_back(dst.encode(induced_map(f, m)));
    }
  }
  return out;
}

bool is_isomorphism(ComplexMap const& m, Complex const& src, Complex const& dst) {
  if (src.dimension() != dst.dimension()) {
    return false;
  }
  for (int d = 0; d <= src.dimension(); ++d) {
    auto const& images = m.images.at(static_cast<std::size_t>(d));
    std::set<std::size_t> hit;
    for (auto const& key : images) {
      if (key.is_degenerate() || key.dim != d) {
        return false;
      }
      hit.insert(key.gen);
    }
    if (hit.size() != images.size() || images.size() != dst.size(d)) {
      return false;
    }
    if (d == 0) {
      continue;
    }
    for (std::size_t g = 0; g < images.size(); ++g) {
      for (int i = 0; i <= d; ++i) {
        auto const f = src.generator_face(d, g, i);
        auto const& lower = m.images.at(static_cast<std::size_t>(f.generator_dim()));
        SimplexKey image = lower.at(f.gen);
        auto const& idx = f.word.indices();
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
          image = dst.degeneracy(image, *it);
        }
        if (image != dst.generator_face(d, images[g].gen, i)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace rigidify

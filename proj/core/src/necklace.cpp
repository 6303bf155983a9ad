#include "rigidify/necklace.hpp"

#include <algorithm>

#include "rigidify/errors.hpp"

namespace rigidify {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet VertexSet::of(std::span<VertexId const> vertices) {
  VertexSet s;
  for (VertexId v : vertices) {
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::interval(VertexId first, VertexId last) {
  VertexSet s;
  for (VertexId v = first; v <= last && last != static_cast<VertexId>(-1); ++v) {
    s.insert(v);
  }
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v >= capacity) {
    throw ContractViolation("vertex beyond VertexSet capacity");
  }
  bits_ |= std::uint64_t{1} << v;
}

std::vector<VertexId> VertexSet::elements() const {
  std::vector<VertexId> out;
  std::uint64_t b = bits_;
  while (b != 0) {
    out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    b &= b - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Necklace

Necklace::Necklace(std::vector<int> beads) : beads_(std::move(beads)) {
  if (beads_.empty()) {
    throw ContractViolation("a necklace has at least one bead");
  }
  bool const point = beads_.size() == 1 && beads_.front() == 0;
  starts_.assign(1, 0);
  for (int n : beads_) {
    if (!point && n < 1) {
      throw ContractViolation("necklace is not in preferred form");
    }
    starts_.push_back(starts_.back() + static_cast<VertexId>(n));
  }
  if (vertex_count() > VertexSet::capacity) {
    throw ContractViolation("necklace has more than 64 vertices");
  }
}

VertexSet Necklace::joints() const { return VertexSet::of(starts_); }

VertexSet Necklace::vertices_between(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) {
    throw ContractViolation("vertex not in necklace");
  }
  return VertexSet::interval(a, b);
}

VertexSet Necklace::joints_between(VertexId a, VertexId b) const {
  auto out = joints() & vertices_between(a, b);
  if (a <= b) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

std::optional<std::size_t> Necklace::bead_containing(VertexId lo,
                                                     VertexId hi) const {
  for (std::size_t i = 0; i < beads_.size(); ++i) {
    if (starts_[i] <= lo && hi <= starts_[i + 1]) {
      return i;
    }
  }
  return std::nullopt;
}

Necklace preferred_form(std::vector<int> const& raw) {
  if (raw.empty()) {
    throw InvalidInput("empty bead list");
  }
  std::vector<int> beads;
  for (int n : raw) {
    if (n < 0) {
      throw InvalidInput("negative bead dimension");
    }
    if (n > 0) {
      beads.push_back(n);
    }
  }
  return beads.empty() ? Necklace::point() : Necklace(std::move(beads));
}

// ---------------------------------------------------------------------------
// NecklaceMorphism

NecklaceMorphism::NecklaceMorphism(Necklace source, Necklace target,
                                   std::vector<VertexId> vertex_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(vertex_map)) {
  if (map_.size() != source_.vertex_count()) {
    throw ContractViolation("vertex map has the wrong length");
  }
  if (map_.front() != target_.alpha() || map_.back() != target_.omega()) {
    throw ContractViolation("necklace map must preserve first and last vertex");
  }
  for (std::size_t v = 1; v < map_.size(); ++v) {
    if (map_[v] < map_[v - 1]) {
      throw ContractViolation("necklace map is not monotone");
    }
  }
  for (std::size_t i = 0; i < source_.bead_count(); ++i) {
    VertexId const lo = map_[source_.bead_start(i)];
    VertexId const hi = map_[source_.bead_end(i)];
    if (!target_.bead_containing(lo, hi)) {
      throw ContractViolation("a bead is not sent into a single bead");
    }
  }
}

NecklaceMorphism NecklaceMorphism::identity(Necklace const& t) {
  std::vector<VertexId> map(t.vertex_count());
  for (VertexId v = 0; v < map.size(); ++v) {
    map[v] = v;
  }
  return NecklaceMorphism(t, t, std::move(map));
}

bool NecklaceMorphism::is_surjective() const {
  return image(source_.vertices()) == target_.vertices();
}

bool NecklaceMorphism::is_injective() const {
  return std::adjacent_find(map_.begin(), map_.end()) == map_.end();
}

VertexSet NecklaceMorphism::image(VertexSet s) const {
  VertexSet out;
  for (VertexId v : s.elements()) {
    out.insert(map_.at(v));
  }
  return out;
}

NecklaceMorphism NecklaceMorphism::after(NecklaceMorphism const& first) const {
  if (first.target() != source_) {
    throw ContractViolation("necklace maps are not composable");
  }
  std::vector<VertexId> map;
  for (VertexId v : first.vertex_map()) {
    map.push_back(map_[v]);
  }
  return NecklaceMorphism(first.source(), target_, std::move(map));
}

// ---------------------------------------------------------------------------
// Wedge, simplex, spine

Wedge wedge(Necklace const& t, Necklace const& u) {
  std::vector<int> beads;
  if (!t.is_point()) {
    beads = t.beads();
  }
  if (!u.is_point()) {
    beads.insert(beads.end(), u.beads().begin(), u.beads().end());
  }
  Wedge out{beads.empty() ? Necklace::point() : Necklace(beads), {}, {}};
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    out.left.push_back(v);
  }
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    out.right.push_back(t.omega() + v);
  }
  return out;
}

NecklaceMorphism outer_simplex(Necklace const& t) {
  Necklace const simplex =
      t.is_point() ? Necklace::point() : Necklace::simplex(static_cast<int>(t.omega()));
  auto id = NecklaceMorphism::identity(t);
  return NecklaceMorphism(t, simplex, id.vertex_map());
}

NecklaceMorphism spine(Necklace const& t) {
  Necklace const sp = t.is_point()
                          ? Necklace::point()
                          : Necklace(std::vector<int>(t.omega(), 1));
  auto id = NecklaceMorphism::identity(t);
  return NecklaceMorphism(sp, t, id.vertex_map());
}

// ---------------------------------------------------------------------------
// Maps into complexes

NecklaceMap make_map(Necklace const& t, OrderedComplex const& s,
                     std::vector<VertexId> const& images) {
  if (images.size() != t.vertex_count()) {
    throw InvalidInput("need one image per necklace vertex");
  }
  NecklaceMap m{t, images, {}};
  if (t.is_point()) {
    if (images.front() >= s.vertex_count()) {
      throw InvalidInput("vertex image out of range");
    }
    m.beads.push_back(SimplexKey::vertex(images.front()));
    return m;
  }
  for (std::size_t i = 0; i < t.bead_count(); ++i) {
    std::span<VertexId const> seq(images.data() + t.bead_start(i),
                                  t.bead_end(i) - t.bead_start(i) + 1);
    auto key = s.key_for(seq);
    if (!key) {
      throw InvalidInput("bead image is not a simplex of the target");
    }
    m.beads.push_back(std::move(*key));
  }
  return m;
}

NecklaceMap make_map(Necklace const& t, Complex const& s,
                     std::vector<SimplexKey> const& bead_images) {
  if (bead_images.size() != t.bead_count()) {
    throw InvalidInput("need one simplex per bead");
  }
  NecklaceMap m{t, {}, bead_images};
  for (std::size_t i = 0; i < t.bead_count(); ++i) {
    auto const& key = bead_images[i];
    if (key.dim != t.beads()[i] || !s.contains(key)) {
      throw InvalidInput("bead image is not a simplex of matching dimension");
    }
    auto verts = s.vertices(key);
    if (i > 0 && m.vertices.back() != verts.front()) {
      throw InvalidInput("consecutive beads do not glue");
    }
    m.vertices.insert(m.vertices.end(), verts.begin() + (i > 0 ? 1 : 0),
                      verts.end());
  }
  return m;
}

bool is_totally_nondegenerate(NecklaceMap const& m) {
  return std::all_of(m.beads.begin(), m.beads.end(),
                     [](SimplexKey const& k) { return !k.is_degenerate(); });
}

bool is_injective(NecklaceMap const& m) {
  auto v = m.vertices;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

NecklaceMap precompose(Complex const& s, NecklaceMap const& m,
                       NecklaceMorphism const& p) {
  if (p.target() != m.necklace) {
    throw ContractViolation("necklace map and morphism are not composable");
  }
  Necklace const& t = p.source();
  NecklaceMap out{t, {}, {}};
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    out.vertices.push_back(m.vertices[p(v)]);
  }
  if (t.is_point()) {
    out.beads.push_back(SimplexKey::vertex(out.vertices.front()));
    return out;
  }
  for (std::size_t i = 0; i < t.bead_count(); ++i) {
    VertexId const lo = p(t.bead_start(i));
    VertexId const hi = p(t.bead_end(i));
    std::size_t const j = *m.necklace.bead_containing(lo, hi);
    VertexId const base = m.necklace.bead_start(j);
    std::vector<int> theta;
    for (VertexId v = t.bead_start(i); v <= t.bead_end(i); ++v) {
      theta.push_back(static_cast<int>(p(v) - base));
    }
    out.beads.push_back(s.restrict(m.beads[j], theta));
  }
  return out;
}

Collapse collapse_to_nondegenerate(Complex const& s, NecklaceMap const& m) {
  Necklace const& t = m.necklace;
  std::vector<int> beads;
  std::vector<SimplexKey> keys;
  std::vector<VertexId> vertex_map(t.vertex_count(), 0);
  VertexId next = 0;
  for (std::size_t i = 0; i < t.bead_count(); ++i) {
    auto const& key = m.beads[i];
    int const base = key.generator_dim();
    auto const sigma = key.word.to_surjection(base);
    for (VertexId v = t.bead_start(i); v <= t.bead_end(i); ++v) {
      vertex_map[v] = next + static_cast<VertexId>(sigma[v - t.bead_start(i)]);
    }
    if (base >= 1) {
      beads.push_back(base);
      keys.push_back(SimplexKey::nondegenerate(base, key.gen));
      next += static_cast<VertexId>(base);
    }
  }
  Necklace collapsed = beads.empty() ? Necklace::point() : Necklace(beads);
  if (keys.empty()) {
    keys.push_back(SimplexKey::vertex(m.vertices.front()));
  }
  NecklaceMap image = make_map(collapsed, s, keys);
  return Collapse{NecklaceMorphism(t, std::move(collapsed), std::move(vertex_map)),
                  std::move(image)};
}

NecklaceMap image_necklace(Complex const& s, NecklaceMap const& m) {
  if (auto verdict = is_ordered(s); !verdict) {
    throw NotOrdered("image_necklace needs an ordered target: " + verdict.reason,
                     verdict.cycle);
  }
  auto collapsed = collapse_to_nondegenerate(s, m).map;
  if (!is_injective(collapsed)) {
    throw ContractViolation("image of a necklace in an ordered complex must be injective");
  }
  return collapsed;
}

std::vector<NecklaceMap> enumerate_injective_maps(OrderedComplex const& s,
                                                  VertexId a, VertexId b) {
  std::size_t const n = s.vertex_count();
  if (a >= n || b >= n) {
    throw ContractViolation("endpoint out of range");
  }
  std::vector<NecklaceMap> out;
  if (a == b) {
    out.push_back(make_map(Necklace::point(), s, {a}));
    return out;
  }
  // Simplices of dimension >= 1 grouped by initial vertex.
  std::vector<std::vector<SimplexKey>> starting(n);
  for (int d = 1; d <= s.dimension(); ++d) {
    for (std::size_t g = 0; g < s.size(d); ++g) {
      starting[s.chain(d, g).front()].push_back(SimplexKey::nondegenerate(d, g));
    }
  }
  std::vector<bool> used(n, false);
  std::vector<int> beads;
  std::vector<SimplexKey> keys;
  std::vector<VertexId> verts{a};
  used[a] = true;

  auto dfs = [&](auto&& self, VertexId cur) -> void {
    if (cur == b) {
      out.push_back(NecklaceMap{Necklace(beads), verts, keys});
      return;
    }
    for (auto const& key : starting[cur]) {
      auto const& c = s.chain(key.dim, key.gen);
      if (std::any_of(c.begin() + 1, c.end(), [&](VertexId v) { return used[v]; })) {
        continue;
      }
      for (auto it = c.begin() + 1; it != c.end(); ++it) {
        used[*it] = true;
        verts.push_back(*it);
      }
      beads.push_back(key.dim);
      keys.push_back(key);
      self(self, c.back());
      keys.pop_back();
      beads.pop_back();
      for (auto it = c.begin() + 1; it != c.end(); ++it) {
        used[*it] = false;
        verts.pop_back();
      }
    }
  };
  dfs(dfs, a);
  std::sort(out.begin(), out.end());
  return out;
}

NecklaceMap wedge_maps(NecklaceMap const& f, NecklaceMap const& g) {
  if (f.target() != g.source()) {
    throw ContractViolation("necklace maps do not share the middle vertex");
  }
  if (f.necklace.is_point()) {
    return g;
  }
  if (g.necklace.is_point()) {
    return f;
  }
  NecklaceMap out{wedge(f.necklace, g.necklace).necklace, f.vertices, f.beads};
  out.vertices.insert(out.vertices.end(), g.vertices.begin() + 1, g.vertices.end());
  out.beads.insert(out.beads.end(), g.beads.begin(), g.beads.end());
  return out;
}

}  // namespace rigidify

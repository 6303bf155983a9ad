#include "rigidify/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "rigidify/category.hpp"
#include "rigidify/mapping.hpp"

namespace rigidify::oracle {

std::vector<std::size_t> strict_chain_counts(int n) {
  std::uint32_t const total = 1U << n;
  std::vector<std::size_t> counts;
  std::vector<std::uint32_t> chain;
  auto extend = [&](auto&& self) -> void {
    std::size_t const k = chain.size() - 1;
    if (counts.size() <= k) {
      counts.resize(k + 1, 0);
    }
    ++counts[k];
    for (std::uint32_t next = 0; next < total; ++next) {
      std::uint32_t const last = chain.back();
      if ((last & next) == last && last != next) {
        chain.push_back(next);
        self(self);
        chain.pop_back();
      }
    }
  };
  for (std::uint32_t start = 0; start < total; ++start) {
    chain.assign(1, start);
    extend(extend);
  }
  return counts;
}

std::uint64_t weak_chain_count(int m, int level) {
  std::uint32_t const total = 1U << m;
  std::size_t const len = static_cast<std::size_t>(level) + 1;
  std::vector<std::uint32_t> tuple(len, 0);
  std::uint64_t count = 0;
  while (true) {
    bool nested = true;
    for (std::size_t t = 0; t + 1 < len && nested; ++t) {
      nested = (tuple[t] & tuple[t + 1]) == tuple[t];
    }
    count += nested ? 1 : 0;
    std::size_t pos = 0;
    while (pos < len && ++tuple[pos] == total) {
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == len) {
      break;
    }
  }
  return count;
}

std::vector<Necklace> necklaces_up_to(std::size_t max_vertices) {
  std::vector<Necklace> out;
  if (max_vertices >= 1) {
    out.push_back(Necklace::point());
  }
  for (std::size_t v = 2; v <= max_vertices; ++v) {
    int const total = static_cast<int>(v) - 1;
    // Compositions of total: bit t set means a bead boundary after t + 1.
    std::uint32_t const cuts = 1U << (total - 1);
    std::vector<std::vector<int>> found;
    for (std::uint32_t mask = 0; mask < cuts; ++mask) {
      std::vector<int> beads;
      int run = 1;
      for (int t = 0; t < total - 1; ++t) {
        if (mask & (1U << t)) {
          beads.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      beads.push_back(run);
      found.push_back(std::move(beads));
    }
    std::sort(found.begin(), found.end());
    for (auto& beads : found) {
      out.emplace_back(std::move(beads));
    }
  }
  return out;
}

OrderedComplex necklace_complex(Necklace const& t) {
  std::vector<std::vector<VertexId>> chains;
  for (std::size_t b = 0; b < t.bead_count(); ++b) {
    std::vector<VertexId> chain(t.bead_end(b) - t.bead_start(b) + 1);
    std::iota(chain.begin(), chain.end(), t.bead_start(b));
    chains.push_back(std::move(chain));
  }
  return OrderedComplex::from_maximal_chains(chains, t.vertex_count());
}

namespace {

// Plain data for a triple, independent of the library's canonical machinery.
struct Raw {
  std::vector<int> beads;             // preferred form; {0} for the point
  std::vector<VertexId> images;
  std::vector<std::uint64_t> flag;

  std::size_t vertex_count() const {
    return static_cast<std::size_t>(std::accumulate(beads.begin(), beads.end(), 0)) + 1;
  }
  std::vector<std::size_t> joints() const {
    std::vector<std::size_t> out{0};
    std::size_t at = 0;
    for (int b : beads) {
      at += static_cast<std::size_t>(b);
      if (b > 0) {
        out.push_back(at);
      }
    }
    return out;
  }
  std::uint64_t joint_mask() const {
    std::uint64_t m = 0;
    for (auto j : joints()) {
      m |= std::uint64_t{1} << j;
    }
    return m;
  }
  // Bead index of each vertex strictly inside a bead, -1 for joints.
  std::vector<int> interior_owner() const {
    std::vector<int> out(vertex_count(), -1);
    std::size_t at = 0;
    for (std::size_t b = 0; b < beads.size(); ++b) {
      for (int k = 1; k < beads[b]; ++k) {
        out[at + static_cast<std::size_t>(k)] = static_cast<int>(b);
      }
      at += static_cast<std::size_t>(beads[b]);
    }
    return out;
  }
  bool operator<(Raw const& o) const {
    return std::tie(beads, images, flag) < std::tie(o.beads, o.images, o.flag);
  }
};

bool beads_are_simplices(OrderedComplex const& s, std::vector<int> const& beads,
                         std::vector<VertexId> const& images) {
  std::size_t at = 0;
  for (int b : beads) {
    std::vector<VertexId> seq(images.begin() + static_cast<std::ptrdiff_t>(at),
                              images.begin() + static_cast<std::ptrdiff_t>(at) + b + 1);
    if (!s.key_for(seq)) {
      return false;
    }
    at += static_cast<std::size_t>(b);
  }
  return true;
}

FlaggedTriple to_triple(OrderedComplex const& s, Raw const& r) {
  Necklace const t = r.beads == std::vector<int>{0} ? Necklace::point() : Necklace(r.beads);
  FlaggedTriple out{make_map(t, s, r.images), {}};
  for (auto m : r.flag) {
    out.flag.emplace_back(m);
  }
  return out;
}

std::vector<int> beads_of(Necklace const& t) { return t.beads(); }

// All vertex image sequences of T into S.
std::vector<std::vector<VertexId>> all_maps(OrderedComplex const& s,
                                            std::vector<int> const& beads,
                                            std::size_t vertices) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur;
  auto grow = [&](auto&& self) -> void {
    if (cur.size() == vertices) {
      if (beads_are_simplices(s, beads, cur)) {
        out.push_back(cur);
      }
      return;
    }
    for (VertexId v = 0; v < s.vertex_count(); ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  return out;
}

// Nested flags of the given length with joints ⊆ F₀.
std::vector<std::vector<std::uint64_t>> all_flags(std::uint64_t joints,
                                                  std::size_t vertices, int length) {
  std::uint64_t const full = (std::uint64_t{1} << vertices) - 1;
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  auto grow = [&](auto&& self) -> void {
    if (cur.size() == static_cast<std::size_t>(length) + 1) {
      out.push_back(cur);
      return;
    }
    std::uint64_t const below = cur.empty() ? joints : cur.back();
    for (std::uint64_t m = 0; m <= full; ++m) {
      if ((m & below) == below) {
        cur.push_back(m);
        self(self);
        cur.pop_back();
      }
    }
  };
  grow(grow);
  return out;
}

// Monotone endpoint preserving vertex maps T' -> T sending beads into beads.
std::vector<std::vector<std::size_t>> all_morphisms(Raw const& from, Raw const& to) {
  std::size_t const nf = from.vertex_count();
  std::size_t const nt = to.vertex_count();
  auto const tj = to.joints();
  auto const fj = from.joints();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto inside_one_bead = [&](std::size_t lo, std::size_t hi) {
    if (tj.size() == 1) {
      return true;
    }
    for (std::size_t k = 0; k + 1 < tj.size(); ++k) {
      if (tj[k] <= lo && hi <= tj[k + 1]) {
        return true;
      }
    }
    return false;
  };
  auto grow = [&](auto&& self) -> void {
    if (cur.size() == nf) {
      if (cur.front() != 0 || cur.back() != nt - 1) {
        return;
      }
      for (std::size_t k = 0; k + 1 < fj.size(); ++k) {
        if (!inside_one_bead(cur[fj[k]], cur[fj[k + 1]])) {
          return;
        }
      }
      out.push_back(cur);
      return;
    }
    std::size_t const low = cur.empty() ? 0 : cur.back();
    for (std::size_t v = low; v < nt; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[root(a)] = root(b); }
};

}  // namespace

QuotientReport quotient_classes(OrderedComplex const& s, int max_length) {
  QuotientReport report;
  auto const necklaces = necklaces_up_to(s.vertex_count());

  struct Shape {
    Raw base;  // beads only
    std::vector<std::vector<VertexId>> maps;
    std::map<std::vector<VertexId>, std::size_t> map_index;
    std::vector<std::vector<std::vector<std::uint64_t>>> flags;  // per length
  };
  std::vector<Shape> shapes;
  for (auto const& t : necklaces) {
    Shape sh;
    sh.base.beads = beads_of(t);
    sh.maps = all_maps(s, sh.base.beads, sh.base.vertex_count());
    for (std::size_t m = 0; m < sh.maps.size(); ++m) {
      sh.map_index.emplace(sh.maps[m], m);
    }
    for (int len = 0; len <= max_length; ++len) {
      sh.flags.push_back(all_flags(sh.base.joint_mask(), sh.base.vertex_count(), len));
    }
    shapes.push_back(std::move(sh));
  }

  // id = offset[shape][len] + map * |flags| + flag
  std::vector<std::vector<std::size_t>> offset(shapes.size());
  std::vector<std::map<std::vector<std::uint64_t>, std::size_t>> flag_index;
  std::size_t total = 0;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    for (int len = 0; len <= max_length; ++len) {
      offset[k].push_back(total);
      total += shapes[k].maps.size() * shapes[k].flags[static_cast<std::size_t>(len)].size();
    }
  }
  report.triples = total;
  auto flag_pos = [&](std::size_t k, int len, std::vector<std::uint64_t> const& f) {
    auto const& list = shapes[k].flags[static_cast<std::size_t>(len)];
    return static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), f) - list.begin());
  };
  auto id_of = [&](std::size_t k, int len, std::size_t map, std::size_t flag) {
    return offset[k][static_cast<std::size_t>(len)] +
           map * shapes[k].flags[static_cast<std::size_t>(len)].size() + flag;
  };
  for (auto& sh : shapes) {
    for (auto& list : sh.flags) {
      std::sort(list.begin(), list.end());
    }
  }

  UnionFind uf(total);
  for (std::size_t from = 0; from < shapes.size(); ++from) {
    for (std::size_t to = 0; to < shapes.size(); ++to) {
      for (auto const& g : all_morphisms(shapes[from].base, shapes[to].base)) {
        ++report.morphisms;
        for (std::size_t m = 0; m < shapes[to].maps.size(); ++m) {
          auto const& f = shapes[to].maps[m];
          std::vector<VertexId> pulled;
          for (auto v : g) {
            pulled.push_back(f[v]);
          }
          std::size_t const pm = shapes[from].map_index.at(pulled);
          for (int len = 0; len <= max_length; ++len) {
            auto const& flags = shapes[from].flags[static_cast<std::size_t>(len)];
            for (std::size_t fl = 0; fl < flags.size(); ++fl) {
              std::vector<std::uint64_t> pushed;
              for (auto entry : flags[fl]) {
                std::uint64_t image = 0;
                for (std::size_t v = 0; v < g.size(); ++v) {
                  if (entry & (std::uint64_t{1} << v)) {
                    image |= std::uint64_t{1} << g[v];
                  }
                }
                pushed.push_back(image);
              }
              uf.join(id_of(from, len, pm, fl), id_of(to, len, m, flag_pos(to, len, pushed)));
            }
          }
        }
      }
    }
  }

  // Canonical value per triple, grouped by class.
  std::map<std::size_t, std::set<MappingSimplex>> by_class;
  std::set<MappingSimplex> values;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    for (int len = 0; len <= max_length; ++len) {
      auto const& flags = shapes[k].flags[static_cast<std::size_t>(len)];
      for (std::size_t m = 0; m < shapes[k].maps.size(); ++m) {
        for (std::size_t fl = 0; fl < flags.size(); ++fl) {
          Raw r{shapes[k].base.beads, shapes[k].maps[m], flags[fl]};
          auto c = canonicalize(s, to_triple(s, r));
          by_class[uf.root(id_of(k, len, m, fl))].insert(c);
          values.insert(c);
        }
      }
    }
  }
  report.classes = by_class.size();
  report.canonical_values = values.size();
  for (auto const& [root, vals] : by_class) {
    (void)root;
    report.split_classes += vals.size() > 1 ? 1 : 0;
  }

  std::set<MappingSimplex> space;
  for (VertexId a = 0; a < s.vertex_count(); ++a) {
    for (VertexId b = 0; b < s.vertex_count(); ++b) {
      auto const ms = mapping_space(s, a, b);
      if (ms.empty()) {
        continue;
      }
      for (int d = 0; d <= max_length; ++d) {
        for (auto const& key : ms.complex.simplices(d)) {
          space.insert(ms.decode(key));
        }
      }
    }
  }
  report.space_simplices = space.size();
  report.bijective = report.split_classes == 0 && report.classes == values.size() &&
                     values == space;
  std::ostringstream os;
  os << report.triples << " triples, " << report.classes << " classes, "
     << report.space_simplices << " mapping-space simplices";
  if (report.split_classes) {
    os << ", " << report.split_classes << " classes with several canonical forms";
  }
  if (values != space) {
    os << ", canonical values differ from mapping-space simplices";
  }
  report.detail = os.str();
  return report;
}

// ---------------------------------------------------------------------------
// Zig-zags

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::optional<Raw> random_triple(OrderedComplex const& s, Rng& rng) {
  std::size_t const v = 1 + pick(rng, 6);
  Raw r;
  if (v == 1) {
    r.beads = {0};
  } else {
    int left = static_cast<int>(v) - 1;
    while (left > 0) {
      int const b = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(left)));
      r.beads.push_back(b);
      left -= b;
    }
  }
  r.images.push_back(pick(rng, s.vertex_count()));
  for (int b : r.beads) {
    if (b == 0) {
      continue;
    }
    std::vector<std::vector<VertexId>> options;
    for (auto const& key : s.simplices(b)) {
      auto verts = s.vertices(key);
      if (verts.front() == r.images.back()) {
        options.push_back(std::move(verts));
      }
    }
    if (options.empty()) {
      return std::nullopt;
    }
    auto const& chosen = options[pick(rng, options.size())];
    r.images.insert(r.images.end(), chosen.begin() + 1, chosen.end());
  }
  std::size_t const n = r.vertex_count();
  std::uint64_t const full = (std::uint64_t{1} << n) - 1;
  std::uint64_t cur = r.joint_mask() | (rng() & full);
  int const length = static_cast<int>(pick(rng, 4));
  r.flag.push_back(cur);
  for (int t = 0; t < length; ++t) {
    cur |= rng() & rng() & full;
    r.flag.push_back(cur);
  }
  return r;
}

std::uint64_t remap(std::uint64_t set, std::vector<std::size_t> const& to) {
  std::uint64_t out = 0;
  for (std::size_t v = 0; v < to.size(); ++v) {
    if (set & (std::uint64_t{1} << v)) {
      out |= std::uint64_t{1} << to[v];
    }
  }
  return out;
}

Raw normalized(Raw r) {
  std::vector<int> kept;
  for (int b : r.beads) {
    if (b > 0) {
      kept.push_back(b);
    }
  }
  r.beads = kept.empty() ? std::vector<int>{0} : kept;
  return r;
}

// (U, f|U, F) for a subnecklace U with F_n ⊆ V_U and J_T ⊆ J_U ⊆ F_0.
std::optional<Raw> restrict_move(Raw const& r, Rng& rng) {
  std::size_t const n = r.vertex_count();
  std::uint64_t const full = (std::uint64_t{1} << n) - 1;
  std::uint64_t const keep = r.flag.back() | (rng() & full);
  std::uint64_t const joints = r.joint_mask() | (rng() & r.flag.front());
  std::vector<std::size_t> rank(n, 0);
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < n; ++v) {
    if (keep & (std::uint64_t{1} << v)) {
      rank[v] = kept.size();
      kept.push_back(v);
    }
  }
  Raw out;
  int run = 0;
  for (std::size_t k = 1; k < kept.size(); ++k) {
    ++run;
    if (joints & (std::uint64_t{1} << kept[k])) {
      out.beads.push_back(run);
      run = 0;
    }
  }
  if (out.beads.empty()) {
    out.beads = {0};
  }
  for (auto v : kept) {
    out.images.push_back(r.images[v]);
  }
  for (auto f : r.flag) {
    std::uint64_t m = 0;
    for (auto v : kept) {
      if (f & (std::uint64_t{1} << v)) {
        m |= std::uint64_t{1} << rank[v];
      }
    }
    out.flag.push_back(m);
  }
  return out;
}

// Inserts a vertex outside the flag inside a bead.
std::optional<Raw> insert_move(OrderedComplex const& s, Raw const& r, Rng& rng) {
  if (r.beads == std::vector<int>{0}) {
    return std::nullopt;
  }
  std::size_t const n = r.vertex_count();
  std::size_t const p = pick(rng, n - 1);  // between p and p + 1
  VertexId const y = pick(rng, s.vertex_count());
  Raw out;
  std::size_t at = 0;
  for (int b : r.beads) {
    bool const here = at <= p && p < at + static_cast<std::size_t>(b);
    out.beads.push_back(b + (here ? 1 : 0));
    at += static_cast<std::size_t>(b);
  }
  out.images = r.images;
  out.images.insert(out.images.begin() + static_cast<std::ptrdiff_t>(p) + 1, y);
  if (!beads_are_simplices(s, out.beads, out.images)) {
    return std::nullopt;
  }
  std::vector<std::size_t> shift(n);
  for (std::size_t v = 0; v < n; ++v) {
    shift[v] = v <= p ? v : v + 1;
  }
  for (auto f : r.flag) {
    out.flag.push_back(remap(f, shift));
  }
  return out;
}

// Merges adjacent vertices of one bead with equal images.
std::optional<Raw> collapse_move(Raw const& r, Rng& rng) {
  std::size_t const n = r.vertex_count();
  std::vector<std::size_t> spots;
  std::size_t at = 0;
  for (int b : r.beads) {
    for (int k = 0; k < b; ++k) {
      std::size_t const p = at + static_cast<std::size_t>(k);
      if (r.images[p] == r.images[p + 1]) {
        spots.push_back(p);
      }
    }
    at += static_cast<std::size_t>(b);
  }
  if (spots.empty()) {
    return std::nullopt;
  }
  std::size_t const p = spots[pick(rng, spots.size())];
  Raw out;
  at = 0;
  for (int b : r.beads) {
    bool const here = at <= p && p < at + static_cast<std::size_t>(b);
    out.beads.push_back(b - (here ? 1 : 0));
    at += static_cast<std::size_t>(b);
  }
  out.images = r.images;
  out.images.erase(out.images.begin() + static_cast<std::ptrdiff_t>(p) + 1);
  std::vector<std::size_t> squash(n);
  for (std::size_t v = 0; v < n; ++v) {
    squash[v] = v <= p ? v : v - 1;
  }
  for (auto f : r.flag) {
    out.flag.push_back(remap(f, squash));
  }
  return normalized(std::move(out));
}

// Doubles a vertex; the copy enters the flag at a random level at or after
// the original.
std::optional<Raw> expand_move(Raw const& r, Rng& rng) {
  std::size_t const n = r.vertex_count();
  if (r.beads == std::vector<int>{0}) {
    Raw out{{1}, {r.images[0], r.images[0]}, {}};
    for (std::size_t i = 0; i < r.flag.size(); ++i) {
      out.flag.push_back(3);
    }
    return out;
  }
  // The copy sits right after p, inside the bead that starts at or
  // contains p.
  std::size_t const p = pick(rng, n - 1);
  Raw out;
  std::size_t at = 0;
  for (int b : r.beads) {
    bool const here = at <= p && p < at + static_cast<std::size_t>(b);
    out.beads.push_back(b + (here ? 1 : 0));
    at += static_cast<std::size_t>(b);
  }
  out.images = r.images;
  out.images.insert(out.images.begin() + static_cast<std::ptrdiff_t>(p) + 1, r.images[p]);
  std::vector<std::size_t> shift(n);
  for (std::size_t v = 0; v < n; ++v) {
    shift[v] = v <= p ? v : v + 1;
  }
  std::size_t first = r.flag.size();
  for (std::size_t i = 0; i < r.flag.size(); ++i) {
    if (r.flag[i] & (std::uint64_t{1} << p)) {
      first = i;
      break;
    }
  }
  std::size_t const enter = first == r.flag.size()
                                ? r.flag.size()
                                : first + pick(rng, r.flag.size() - first + 1);
  for (std::size_t i = 0; i < r.flag.size(); ++i) {
    std::uint64_t m = remap(r.flag[i], shift);
    if (i >= enter) {
      m |= std::uint64_t{1} << (p + 1);
    }
    out.flag.push_back(m);
  }
  return out;
}

// Splits a bead at an interior vertex of F₀.
std::optional<Raw> split_move(Raw const& r, Rng& rng) {
  auto const owner = r.interior_owner();
  std::vector<std::size_t> spots;
  for (std::size_t v = 0; v < owner.size(); ++v) {
    if (owner[v] >= 0 && (r.flag.front() & (std::uint64_t{1} << v))) {
      spots.push_back(v);
    }
  }
  if (spots.empty()) {
    return std::nullopt;
  }
  std::size_t const q = spots[pick(rng, spots.size())];
  Raw out = r;
  out.beads.clear();
  std::size_t at = 0;
  for (int b : r.beads) {
    if (at < q && q < at + static_cast<std::size_t>(b)) {
      out.beads.push_back(static_cast<int>(q - at));
      out.beads.push_back(static_cast<int>(at + static_cast<std::size_t>(b) - q));
    } else {
      out.beads.push_back(b);
    }
    at += static_cast<std::size_t>(b);
  }
  return out;
}

// Merges two adjacent beads whose joined image is a simplex.
std::optional<Raw> merge_move(OrderedComplex const& s, Raw const& r, Rng& rng) {
  if (r.beads.size() < 2) {
    return std::nullopt;
  }
  std::size_t const k = pick(rng, r.beads.size() - 1);
  Raw out = r;
  out.beads.erase(out.beads.begin() + static_cast<std::ptrdiff_t>(k) + 1);
  out.beads[k] = r.beads[k] + r.beads[k + 1];
  if (!beads_are_simplices(s, out.beads, out.images)) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

ZigzagReport random_zigzags(OrderedComplex const& s, std::size_t count,
                            int max_moves, std::uint64_t seed) {
  ZigzagReport report;
  Rng rng(seed);
  std::ostringstream failures;
  while (report.triples < count) {
    auto start = random_triple(s, rng);
    if (!start) {
      continue;
    }
    ++report.triples;
    Raw cur = *start;
    auto const target = canonicalize(s, to_triple(s, cur));
    if (canonicalize(s, target.triple()) != target) {
      ++report.not_idempotent;
    }
    int const moves = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(max_moves)));
    for (int step = 0; step < moves; ++step) {
      std::optional<Raw> next;
      for (int attempt = 0; attempt < 16 && !next; ++attempt) {
        switch (pick(rng, 6)) {
          case 0: next = restrict_move(cur, rng); break;
          case 1: next = insert_move(s, cur, rng); break;
          case 2: next = collapse_move(cur, rng); break;
          case 3: next = expand_move(cur, rng); break;
          case 4: next = split_move(cur, rng); break;
          default: next = merge_move(s, cur, rng); break;
        }
      }
      if (!next) {
        break;
      }
      cur = std::move(*next);
      ++report.members;
      auto const value = canonicalize(s, to_triple(s, cur));
      if (value != target) {
        if (report.mismatches == 0) {
          failures << "first mismatch after " << step + 1 << " moves";
        }
        ++report.mismatches;
      }
      if (canonicalize(s, value.triple()) != value) {
        ++report.not_idempotent;
      }
    }
  }
  std::ostringstream os;
  os << report.triples << " triples, " << report.members << " zig-zag members, "
     << report.mismatches << " mismatches, " << report.not_idempotent
     << " non-idempotent";
  if (report.mismatches) {
    os << " (" << failures.str() << ")";
  }
  report.detail = os.str();
  return report;
}

}  // namespace rigidify::oracle

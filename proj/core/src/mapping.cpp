#include "rigidify/mapping.hpp"

#include <algorithm>
#include <map>

#include "rigidify/errors.hpp"

namespace rigidify {

void validate_flag(Necklace const& t, Flag const& flag) {
  if (flag.empty()) {
    throw ContractViolation("a flag has at least one entry");
  }
  if (!t.joints().is_subset_of(flag.front())) {
    throw ContractViolation("first flag entry must contain the joints");
  }
  if (!flag.back().is_subset_of(t.vertices())) {
    throw ContractViolation("last flag entry must lie in the vertices");
  }
  for (std::size_t i = 1; i < flag.size(); ++i) {
    if (!flag[i - 1].is_subset_of(flag[i])) {
      throw ContractViolation("flag is not nested");
    }
  }
}

bool is_flanked(FlaggedTriple const& t) {
  return t.flag.front() == t.necklace().joints() &&
         t.flag.back() == t.necklace().vertices();
}

bool MappingSimplex::is_degenerate() const {
  auto const& f = triple_.flag;
  return std::adjacent_find(f.begin(), f.end()) != f.end();
}

FlaggedTriple flankify(Complex const& s, FlaggedTriple const& t) {
  Necklace const& neck = t.necklace();
  validate_flag(neck, t.flag);
  auto const kept = t.flag.back().elements();
  auto const joints = t.flag.front().elements();

  std::vector<VertexId> rank(neck.vertex_count(), 0);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    rank[kept[r]] = r;
  }

  FlaggedTriple out;
  if (joints.size() == 1) {
    out.map = NecklaceMap{Necklace::point(), {t.map.vertices[joints.front()]},
                          {SimplexKey::vertex(t.map.vertices[joints.front()])}};
  } else {
    std::vector<int> beads;
    std::vector<SimplexKey> keys;
    for (std::size_t k = 0; k + 1 < joints.size(); ++k) {
      VertexId const lo = joints[k];
      VertexId const hi = joints[k + 1];
      std::size_t const bead = *neck.bead_containing(lo, hi);
      VertexId const base = neck.bead_start(bead);
      std::vector<int> theta;
      for (VertexId v = lo; v <= hi; ++v) {
        if (t.flag.back().contains(v)) {
          theta.push_back(static_cast<int>(v - base));
        }
      }
      beads.push_back(static_cast<int>(theta.size()) - 1);
      keys.push_back(s.restrict(t.map.beads[bead], theta));
    }
    std::vector<VertexId> images;
    for (VertexId v : kept) {
      images.push_back(t.map.vertices[v]);
    }
    out.map = NecklaceMap{Necklace(std::move(beads)), std::move(images), std::move(keys)};
  }
  for (auto const& entry : t.flag) {
    VertexSet moved;
    for (VertexId v : entry.elements()) {
      moved.insert(rank[v]);
    }
    out.flag.push_back(moved);
  }
  return out;
}

MappingSimplex canonicalize(Complex const& s, FlaggedTriple const& t) {
  FlaggedTriple cur = t;
  for (int pass = 0; pass < 2; ++pass) {
    cur = flankify(s, cur);
    if (is_totally_nondegenerate(cur.map)) {
      return MappingSimplex(std::move(cur));
    }
    auto collapsed = collapse_to_nondegenerate(s, cur.map);
    Flag pushed;
    for (auto const& entry : cur.flag) {
      pushed.push_back(collapsed.surjection.image(entry));
    }
    cur = FlaggedTriple{std::move(collapsed.map), std::move(pushed)};
  }
  throw std::logic_error("canonical form did not stabilise after two passes");
}

MappingSimplex face(Complex const& s, MappingSimplex const& m, int i) {
  if (m.dim() < 1 || i < 0 || i > m.dim()) {
    throw ContractViolation("face index out of range");
  }
  FlaggedTriple t = m.triple();
  t.flag.erase(t.flag.begin() + i);
  return canonicalize(s, t);
}

MappingSimplex degeneracy(MappingSimplex const& m, int i) {
  if (i < 0 || i > m.dim()) {
    throw ContractViolation("degeneracy index out of range");
  }
  FlaggedTriple t = m.triple();
  t.flag.insert(t.flag.begin() + i, t.flag[static_cast<std::size_t>(i)]);
  return MappingSimplex(std::move(t));
}

MappingSimplex compose(Complex const& s, MappingSimplex const& g,
                       MappingSimplex const& f) {
  if (f.target() != g.source()) {
    throw ContractViolation("composition endpoints do not match");
  }
  if (f.dim() != g.dim()) {
    throw ContractViolation("composition needs simplices of equal dimension");
  }
  FlaggedTriple t;
  t.map = wedge_maps(f.map(), g.map());
  VertexId const shift = f.necklace().omega();
  for (std::size_t i = 0; i < f.flag().size(); ++i) {
    VertexSet entry = f.flag()[i];
    for (VertexId v : g.flag()[i].elements()) {
      entry.insert(v + shift);
    }
    t.flag.push_back(entry);
  }
  return canonicalize(s, t);
}

MappingSimplex identity_simplex(Complex const& s, VertexId a, int dim) {
  if (a >= s.vertex_count() || dim < 0) {
    throw ContractViolation("identity of a missing object");
  }
  FlaggedTriple t{NecklaceMap{Necklace::point(), {a}, {SimplexKey::vertex(a)}},
                  Flag(static_cast<std::size_t>(dim) + 1, VertexSet(1))};
  return canonicalize(s, t);
}

// ---------------------------------------------------------------------------
// Cube nerves

int CubeNerve::cube_dimension() const {
  if (chains.empty()) {
    return -1;
  }
  return static_cast<int>((top - bottom).size());
}

std::optional<std::size_t> CubeNerve::find(
    std::span<VertexSet const> chain) const {
  if (chain.empty() || chain.size() > chains.size()) {
    return std::nullopt;
  }
  auto const& level = chains[chain.size() - 1];
  std::vector<VertexSet> key(chain.begin(), chain.end());
  auto it = std::lower_bound(level.begin(), level.end(), key);
  if (it == level.end() || *it != key) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - level.begin());
}

namespace {

std::string set_label(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s.elements()) {
    if (!first) {
      out += ',';
    }
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace

CubeNerve necklace_mapping_space(Necklace const& t, VertexId a, VertexId b) {
  CubeNerve out;
  out.necklace = t;
  out.from = a;
  out.to = b;
  if (a >= t.vertex_count() || b >= t.vertex_count()) {
    throw ContractViolation("endpoint not a vertex of the necklace");
  }
  if (b < a) {
    out.complex = GeneratedComplex::Builder().build();
    return out;
  }
  out.bottom = t.joints_between(a, b);
  out.top = t.vertices_between(a, b);
  auto const free = (out.top - out.bottom).elements();
  std::size_t const nfree = free.size();

  // Every strict chain: a start subset then successive nonempty additions.
  std::vector<std::vector<VertexSet>> all;
  std::vector<VertexSet> cur;
  auto extend = [&](auto&& self, std::uint32_t used) -> void {
    all.push_back(cur);
    std::uint32_t const rest = ((1U << nfree) - 1) & ~used;
    for (std::uint32_t add = rest; add != 0; add = (add - 1) & rest) {
      VertexSet next = cur.back();
      for (std::size_t k = 0; k < nfree; ++k) {
        if (add & (1U << k)) {
          next.insert(free[k]);
        }
      }
      cur.push_back(next);
      self(self, used | add);
      cur.pop_back();
    }
  };
  for (std::uint32_t start = 0; start < (1U << nfree); ++start) {
    VertexSet s = out.bottom;
    for (std::size_t k = 0; k < nfree; ++k) {
      if (start & (1U << k)) {
        s.insert(free[k]);
      }
    }
    cur.assign(1, s);
    extend(extend, start);
  }
  for (auto& c : all) {
    std::size_t const d = c.size() - 1;
    if (out.chains.size() <= d) {
      out.chains.resize(d + 1);
    }
    out.chains[d].push_back(std::move(c));
  }
  for (auto& level : out.chains) {
    std::sort(level.begin(), level.end());
  }

  GeneratedComplex::Builder builder;
  for (std::size_t d = 0; d < out.chains.size(); ++d) {
    for (auto const& c : out.chains[d]) {
      std::string label;
      for (std::size_t k = 0; k < c.size(); ++k) {
        label += (k == 0 ? "" : "<") + set_label(c[k]);
      }
      builder.add_generator(static_cast<int>(d), std::move(label));
    }
  }
  for (std::size_t d = 1; d < out.chains.size(); ++d) {
    for (std::size_t g = 0; g < out.chains[d].size(); ++g) {
      for (std::size_t i = 0; i <= d; ++i) {
        auto c = out.chains[d][g];
        c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
        builder.set_face(static_cast<int>(d), g, static_cast<int>(i),
                         SimplexKey::nondegenerate(static_cast<int>(d) - 1, *out.find(c)));
      }
    }
  }
  out.complex = std::move(builder).build();
  return out;
}

std::vector<VertexSet> cube_face(Necklace const& t, VertexId a, VertexId b,
                                 VertexSet yes, VertexSet no, VertexSet maybe) {
  if (b < a) {
    throw ContractViolation("cube is empty when b precedes a");
  }
  VertexSet const top = t.vertices_between(a, b);
  if ((yes & no).bits() != 0 || (yes & maybe).bits() != 0 ||
      (no & maybe).bits() != 0) {
    throw ContractViolation("Y, N and M must be disjoint");
  }
  if ((yes | no | maybe) != top) {
    throw ContractViolation("Y, N and M must cover V_T(a, b)");
  }
  if (!t.joints_between(a, b).is_subset_of(yes)) {
    throw ContractViolation("Y must contain J_T(a, b)");
  }
  std::vector<VertexSet> chain{yes};
  for (VertexId v : maybe.elements()) {
    VertexSet next = chain.back();
    next.insert(v);
    chain.push_back(next);
  }
  return chain;
}

}  // namespace rigidify

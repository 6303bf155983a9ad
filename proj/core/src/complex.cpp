#include "rigidify/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rigidify/errors.hpp"

namespace rigidify {

namespace {

std::string chain_label(std::vector<VertexId> const& chain) {
  std::string out = "[";
  for (std::size_t t = 0; t < chain.size(); ++t) {
    if (t != 0) {
      out += ',';
    }
    out += std::to_string(chain[t]);
  }
  out += ']';
  return out;
}

// All subsets of {0..n-1} of the given size, in lexicographic order.
void for_each_subset(int n, int size, std::vector<int>& current, int start,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < n; ++i) {
    current.push_back(i);
    for_each_subset(n, size, current, i + 1, out);
    current.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Complex

std::string Complex::generator_label(int dim, std::size_t gen) const {
  return chain_label(generator_vertices(dim, gen));
}

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dimension(); ++d) {
    out.push_back(size(d));
  }
  return out;
}

bool Complex::contains(SimplexKey const& key) const {
  int const base = key.generator_dim();
  if (key.dim < 0 || base < 0 || key.gen >= size(base)) {
    return false;
  }
  return key.word.empty() || key.word.indices().front() < key.dim;
}

std::vector<VertexId> Complex::vertices(SimplexKey const& key) const {
  if (!contains(key)) {
    throw ContractViolation("simplex key does not belong to this complex");
  }
  auto const& gv = generator_vertices(key.generator_dim(), key.gen);
  auto const sigma = key.word.to_surjection(key.generator_dim());
  std::vector<VertexId> out;
  out.reserve(sigma.size());
  for (int v : sigma) {
    out.push_back(gv[static_cast<std::size_t>(v)]);
  }
  return out;
}

SimplexKey Complex::face(SimplexKey const& key, int i) const {
  return apply_operator(*this, key, Operator::face(i));
}

SimplexKey Complex::degeneracy(SimplexKey const& key, int i) const {
  return apply_operator(*this, key, Operator::degeneracy(i));
}

SimplexKey Complex::restrict(SimplexKey const& key,
                             std::span<int const> theta) const {
  if (theta.empty()) {
    throw ContractViolation("restriction along an empty map");
  }
  std::vector<bool> hit(static_cast<std::size_t>(key.dim) + 1, false);
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (theta[t] < 0 || theta[t] > key.dim ||
        (t > 0 && theta[t] < theta[t - 1])) {
      throw ContractViolation("restriction map is not monotone into the simplex");
    }
    hit[static_cast<std::size_t>(theta[t])] = true;
  }
  SimplexKey cur = key;
  for (int j = key.dim; j >= 0; --j) {
    if (!hit[static_cast<std::size_t>(j)]) {
      cur = face(cur, j);
    }
  }
  for (std::size_t t = 0; t + 1 < theta.size(); ++t) {
    if (theta[t] == theta[t + 1]) {
      cur = degeneracy(cur, static_cast<int>(t));
    }
  }
  return cur;
}

std::vector<SimplexKey> Complex::simplices(int dim) const {
  std::vector<SimplexKey> out;
  if (dim < 0) {
    return out;
  }
  for (int base = 0; base <= std::min(dim, dimension()); ++base) {
    std::vector<std::vector<int>> words;
    std::vector<int> scratch;
    for_each_subset(dim, dim - base, scratch, 0, words);
    for (std::size_t g = 0; g < size(base); ++g) {
      for (auto const& w : words) {
        out.push_back(SimplexKey{dim, g, DegeneracyWord::from_indices(w)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplexKey apply_operator(Complex const& complex, SimplexKey const& key,
                          Operator op) {
  if (!complex.contains(key)) {
    throw ContractViolation("simplex key does not belong to this complex");
  }
  int const n = key.dim;
  int const base = key.generator_dim();
  auto sigma = key.word.to_surjection(base);

  if (op.kind == Operator::Kind::degeneracy) {
    if (op.index < 0 || op.index > n) {
      throw ContractViolation("degeneracy index out of range");
    }
    sigma.insert(sigma.begin() + op.index, sigma[static_cast<std::size_t>(op.index)]);
    return SimplexKey{n + 1, key.gen, DegeneracyWord::from_surjection(sigma)};
  }

  if (n == 0 || op.index < 0 || op.index > n) {
    throw ContractViolation("face index out of range");
  }
  int const missing = sigma[static_cast<std::size_t>(op.index)];
  sigma.erase(sigma.begin() + op.index);
  bool const still_onto =
      std::find(sigma.begin(), sigma.end(), missing) != sigma.end();
  if (still_onto) {
    return SimplexKey{n - 1, key.gen, DegeneracyWord::from_surjection(sigma)};
  }
  // sigma ∘ δ_i = δ_missing ∘ tau with tau a surjection onto [base - 1].
  for (int& v : sigma) {
    if (v > missing) {
      --v;
    }
  }
  SimplexKey const gface = complex.generator_face(base, key.gen, missing);
  auto const inner = gface.word.to_surjection(gface.generator_dim());
  std::vector<int> composite;
  composite.reserve(sigma.size());
  for (int v : sigma) {
    composite.push_back(inner[static_cast<std::size_t>(v)]);
  }
  return SimplexKey{n - 1, gface.gen, DegeneracyWord::from_surjection(composite)};
}

// ---------------------------------------------------------------------------
// GeneratedComplex

std::size_t GeneratedComplex::Builder::add_generator(int dim,
                                                     std::string label) {
  if (dim < 0) {
    throw ContractViolation("negative generator dimension");
  }
  if (gens_.size() <= static_cast<std::size_t>(dim)) {
    gens_.resize(static_cast<std::size_t>(dim) + 1);
  }
  auto& level = gens_[static_cast<std::size_t>(dim)];
  level.push_back(Pending{std::move(label),
                          std::vector<std::optional<SimplexKey>>(
                              dim == 0 ? 0 : static_cast<std::size_t>(dim) + 1)});
  return level.size() - 1;
}

void GeneratedComplex::Builder::set_face(int dim, std::size_t gen, int i,
                                         SimplexKey face) {
  if (dim < 1 || static_cast<std::size_t>(dim) >= gens_.size() ||
      gen >= gens_[static_cast<std::size_t>(dim)].size() || i < 0 || i > dim) {
    throw ContractViolation("face slot out of range");
  }
  if (face.dim != dim - 1) {
    throw ContractViolation("face has the wrong dimension");
  }
  gens_[static_cast<std::size_t>(dim)][gen].faces[static_cast<std::size_t>(i)] =
      std::move(face);
}

std::size_t GeneratedComplex::Builder::size(int dim) const {
  return dim >= 0 && static_cast<std::size_t>(dim) < gens_.size()
             ? gens_[static_cast<std::size_t>(dim)].size()
             : 0;
}

GeneratedComplex GeneratedComplex::Builder::build() && {
  GeneratedComplex out;
  while (!gens_.empty() && gens_.back().empty()) {
    gens_.pop_back();
  }
  out.gens_.resize(gens_.size());
  for (std::size_t d = 0; d < gens_.size(); ++d) {
    for (auto& p : gens_[d]) {
      Generator g;
      g.label = std::move(p.label);
      for (auto& f : p.faces) {
        if (!f) {
          throw InvalidInput("face table is not total");
        }
        g.faces.push_back(std::move(*f));
      }
      out.gens_[d].push_back(std::move(g));
    }
  }
  // Faces must point below, at existing generators.
  for (std::size_t d = 1; d < out.gens_.size(); ++d) {
    for (auto const& g : out.gens_[d]) {
      for (auto const& f : g.faces) {
        if (!out.contains(f)) {
          throw InvalidInput("face refers to a missing generator");
        }
      }
    }
  }
  for (std::size_t d = 0; d < out.gens_.size(); ++d) {
    for (std::size_t gi = 0; gi < out.gens_[d].size(); ++gi) {
      auto& g = out.gens_[d][gi];
      if (d == 0) {
        g.vertices = {gi};
        continue;
      }
      g.vertices = out.vertices(g.faces[d]);
      g.vertices.push_back(out.vertices(g.faces[0]).back());
    }
  }
  for (std::size_t d = 1; d < out.gens_.size(); ++d) {
    int const n = static_cast<int>(d);
    for (std::size_t gi = 0; gi < out.gens_[d].size(); ++gi) {
      SimplexKey const x = SimplexKey::nondegenerate(n, gi);
      auto const verts = out.gens_[d][gi].vertices;
      for (int i = 0; i <= n; ++i) {
        auto expected = verts;
        expected.erase(expected.begin() + i);
        if (out.vertices(out.face(x, i)) != expected) {
          throw InvalidInput("face table is inconsistent on vertices");
        }
      }
      if (n < 2) {
        continue;
      }
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (out.face(out.face(x, j), i) != out.face(out.face(x, i), j - 1)) {
            throw InvalidInput("face table violates d_i d_j = d_{j-1} d_i");
          }
        }
      }
    }
  }
  return out;
}

int GeneratedComplex::dimension() const {
  return static_cast<int>(gens_.size()) - 1;
}

std::size_t GeneratedComplex::size(int dim) const {
  return dim >= 0 && static_cast<std::size_t>(dim) < gens_.size()
             ? gens_[static_cast<std::size_t>(dim)].size()
             : 0;
}

SimplexKey GeneratedComplex::generator_face(int dim, std::size_t gen,
                                            int i) const {
  if (dim < 1 || gen >= size(dim) || i < 0 || i > dim) {
    throw ContractViolation("generator face out of range");
  }
  return gens_[static_cast<std::size_t>(dim)][gen].faces[static_cast<std::size_t>(i)];
}

std::vector<VertexId> const& GeneratedComplex::generator_vertices(
    int dim, std::size_t gen) const {
  if (gen >= size(dim)) {
    throw ContractViolation("generator out of range");
  }
  return gens_[static_cast<std::size_t>(dim)][gen].vertices;
}

std::string GeneratedComplex::generator_label(int dim, std::size_t gen) const {
  if (gen >= size(dim)) {
    throw ContractViolation("generator out of range");
  }
  auto const& label = gens_[static_cast<std::size_t>(dim)][gen].label;
  return label.empty() ? Complex::generator_label(dim, gen) : label;
}

std::optional<SimplexKey> GeneratedComplex::find_label(
    std::string const& label) const {
  for (std::size_t d = 0; d < gens_.size(); ++d) {
    for (std::size_t g = 0; g < gens_[d].size(); ++g) {
      if (gens_[d][g].label == label) {
        return SimplexKey::nondegenerate(static_cast<int>(d), g);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// OrderedComplex

OrderedComplex OrderedComplex::from_maximal_chains(
    std::vector<std::vector<VertexId>> const& chains,
    std::size_t vertex_count) {
  std::size_t n = vertex_count;
  std::set<std::vector<VertexId>> all;
  for (auto const& c : chains) {
    if (c.empty()) {
      throw InvalidInput("empty chain");
    }
    if (c.size() > 24) {
      throw InvalidInput("chain too long");
    }
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("chain repeats a vertex");
    }
    n = std::max(n, sorted.back() + 1);
    std::uint32_t const limit = 1U << c.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      std::vector<VertexId> sub;
      for (std::size_t t = 0; t < c.size(); ++t) {
        if (mask & (1U << t)) {
          sub.push_back(c[t]);
        }
      }
      all.insert(std::move(sub));
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    all.insert({v});
  }

  OrderedComplex out;
  for (auto const& c : all) {
    std::size_t const d = c.size() - 1;
    if (out.chains_.size() <= d) {
      out.chains_.resize(d + 1);
    }
    out.chains_[d].push_back(c);
  }
  for (auto& level : out.chains_) {
    std::sort(level.begin(), level.end());
    for (std::size_t g = 0; g < level.size(); ++g) {
      out.index_.emplace(level[g], g);
    }
  }

  auto const rel = preceq(out);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      if (rel.related(x, y) && rel.related(y, x)) {
        auto cycle = *directed_path(out, x, y);
        auto back = *directed_path(out, y, x);
        cycle.insert(cycle.end(), back.begin() + 1, back.end());
        throw NotOrdered("reachability is not antisymmetric", std::move(cycle));
      }
    }
  }
  return out;
}

OrderedComplex OrderedComplex::from_complex(Complex const& complex) {
  auto const verdict = is_ordered(complex);
  if (!verdict) {
    throw NotOrdered(verdict.reason, verdict.cycle);
  }
  std::vector<std::vector<VertexId>> chains;
  for (int d = 1; d <= complex.dimension(); ++d) {
    for (std::size_t g = 0; g < complex.size(d); ++g) {
      chains.push_back(complex.generator_vertices(d, g));
    }
  }
  return from_maximal_chains(chains, complex.vertex_count());
}

int OrderedComplex::dimension() const {
  return static_cast<int>(chains_.size()) - 1;
}

std::size_t OrderedComplex::size(int dim) const {
  return dim >= 0 && static_cast<std::size_t>(dim) < chains_.size()
             ? chains_[static_cast<std::size_t>(dim)].size()
             : 0;
}

SimplexKey OrderedComplex::generator_face(int dim, std::size_t gen,
                                          int i) const {
  if (dim < 1 || gen >= size(dim) || i < 0 || i > dim) {
    throw ContractViolation("generator face out of range");
  }
  auto c = chains_[static_cast<std::size_t>(dim)][gen];
  c.erase(c.begin() + i);
  return SimplexKey::nondegenerate(dim - 1, index_.at(c));
}

std::vector<VertexId> const& OrderedComplex::generator_vertices(
    int dim, std::size_t gen) const {
  if (gen >= size(dim)) {
    throw ContractViolation("generator out of range");
  }
  return chains_[static_cast<std::size_t>(dim)][gen];
}

std::optional<std::size_t> OrderedComplex::find(
    std::span<VertexId const> chain) const {
  auto it = index_.find(std::vector<VertexId>(chain.begin(), chain.end()));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<SimplexKey> OrderedComplex::key_for(
    std::span<VertexId const> sequence) const {
  if (sequence.empty()) {
    return std::nullopt;
  }
  std::vector<VertexId> distinct;
  std::vector<int> sigma;
  for (std::size_t t = 0; t < sequence.size(); ++t) {
    if (t == 0 || sequence[t] != sequence[t - 1]) {
      distinct.push_back(sequence[t]);
    }
    sigma.push_back(static_cast<int>(distinct.size()) - 1);
  }
  auto gen = find(distinct);
  if (!gen) {
    return std::nullopt;
  }
  return SimplexKey{static_cast<int>(sequence.size()) - 1, *gen,
                    DegeneracyWord::from_surjection(sigma)};
}

std::vector<std::vector<VertexId>> OrderedComplex::maximal_chains() const {
  std::set<std::vector<VertexId>> faces;
  for (std::size_t d = 1; d < chains_.size(); ++d) {
    for (auto const& c : chains_[d]) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        auto f = c;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        faces.insert(std::move(f));
      }
    }
  }
  std::vector<std::vector<VertexId>> out;
  for (auto const& level : chains_) {
    for (auto const& c : level) {
      if (!faces.contains(c)) {
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratedComplex OrderedComplex::to_generated() const {
  GeneratedComplex::Builder b;
  for (std::size_t d = 0; d < chains_.size(); ++d) {
    for (auto const& c : chains_[d]) {
      b.add_generator(static_cast<int>(d), chain_label(c));
    }
  }
  for (std::size_t d = 1; d < chains_.size(); ++d) {
    int const n = static_cast<int>(d);
    for (std::size_t g = 0; g < chains_[d].size(); ++g) {
      for (int i = 0; i <= n; ++i) {
        b.set_face(n, g, i, generator_face(n, g, i));
      }
    }
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Preorder and ordering

bool PreorderRelation::is_reflexive() const {
  for (VertexId x = 0; x < n_; ++x) {
    if (!related(x, x)) {
      return false;
    }
  }
  return true;
}

bool PreorderRelation::is_transitive() const {
  for (VertexId x = 0; x < n_; ++x) {
    for (VertexId y = 0; y < n_; ++y) {
      if (!related(x, y)) {
        continue;
      }
      for (VertexId z = 0; z < n_; ++z) {
        if (related(y, z) && !related(x, z)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool PreorderRelation::is_antisymmetric() const {
  for (VertexId x = 0; x < n_; ++x) {
    for (VertexId y = x + 1; y < n_; ++y) {
      if (related(x, y) && related(y, x)) {
        return false;
      }
    }
  }
  return true;
}

PreorderRelation PreorderRelation::closure() const {
  PreorderRelation out = *this;
  for (VertexId x = 0; x < n_; ++x) {
    out.set(x, x);
  }
  for (VertexId k = 0; k < n_; ++k) {
    for (VertexId x = 0; x < n_; ++x) {
      if (!out.related(x, k)) {
        continue;
      }
      for (VertexId y = 0; y < n_; ++y) {
        if (out.related(k, y)) {
          out.set(x, y);
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<std::vector<VertexId>> edge_lists(Complex const& complex) {
  std::vector<std::vector<VertexId>> out(complex.vertex_count());
  for (std::size_t e = 0; e < complex.size(1); ++e) {
    auto const& v = complex.generator_vertices(1, e);
    out[v[0]].push_back(v[1]);
  }
  for (auto& targets : out) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }
  return out;
}

}  // namespace

PreorderRelation preceq(Complex const& complex) {
  auto const adj = edge_lists(complex);
  std::size_t const n = adj.size();
  PreorderRelation rel(n);
  for (VertexId x = 0; x < n; ++x) {
    std::deque<VertexId> queue{x};
    rel.set(x, x);
    while (!queue.empty()) {
      VertexId const u = queue.front();
      queue.pop_front();
      for (VertexId w : adj[u]) {
        if (!rel.related(x, w)) {
          rel.set(x, w);
          queue.push_back(w);
        }
      }
    }
  }
  return rel;
}

std::optional<std::vector<VertexId>> directed_path(Complex const& complex,
                                                   VertexId from, VertexId to) {
  auto const adj = edge_lists(complex);
  std::size_t const n = adj.size();
  if (from >= n || to >= n) {
    throw ContractViolation("vertex out of range");
  }
  std::vector<std::optional<VertexId>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    VertexId const u = queue.front();
    queue.pop_front();
    if (u == to) {
      break;
    }
    for (VertexId w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (!seen[to]) {
    return std::nullopt;
  }
  std::vector<VertexId> path{to};
  while (path.back() != from) {
    path.push_back(*parent[path.back()]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

OrderedVerdict is_ordered(Complex const& complex) {
  OrderedVerdict verdict;
  auto const rel = preceq(complex);
  for (VertexId x = 0; x < rel.size(); ++x) {
    for (VertexId y = x + 1; y < rel.size(); ++y) {
      if (rel.related(x, y) && rel.related(y, x)) {
        verdict.ordered = false;
        verdict.cycle = *directed_path(complex, x, y);
        auto back = *directed_path(complex, y, x);
        verdict.cycle.insert(verdict.cycle.end(), back.begin() + 1, back.end());
        verdict.reason = "reachability is not antisymmetric";
        return verdict;
      }
    }
  }
  for (int d = 1; d <= complex.dimension(); ++d) {
    std::map<std::vector<VertexId>, std::size_t> seen;
    for (std::size_t g = 0; g < complex.size(d); ++g) {
      auto const& verts = complex.generator_vertices(d, g);
      SimplexKey const key = SimplexKey::nondegenerate(d, g);
      for (int t = 0; t + 1 <= d; ++t) {
        if (verts[static_cast<std::size_t>(t)] ==
            verts[static_cast<std::size_t>(t) + 1]) {
          verdict.ordered = false;
          verdict.clash = std::make_pair(
              key, complex.degeneracy(complex.face(key, t + 1), t));
          verdict.reason =
              "a nondegenerate simplex shares its vertex sequence with a "
              "degenerate one";
          return verdict;
        }
      }
      auto [it, fresh] = seen.emplace(verts, g);
      if (!fresh) {
        verdict.ordered = false;
        verdict.clash = std::make_pair(SimplexKey::nondegenerate(d, it->second), key);
        verdict.reason = "two simplices share a vertex sequence";
        return verdict;
      }
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Simple inclusions

Subcomplex::Subcomplex(Complex const& ambient) {
  members_.resize(static_cast<std::size_t>(std::max(ambient.dimension() + 1, 0)));
  for (std::size_t d = 0; d < members_.size(); ++d) {
    members_[d].assign(ambient.size(static_cast<int>(d)), false);
  }
}

Subcomplex Subcomplex::generated_by(Complex const& ambient,
                                    std::vector<SimplexKey> const& simplices) {
  Subcomplex sub(ambient);
  std::vector<SimplexKey> stack;
  for (auto const& s : simplices) {
    if (!ambient.contains(s)) {
      throw ContractViolation("simplex not in ambient complex");
    }
    stack.push_back(SimplexKey::nondegenerate(s.generator_dim(), s.gen));
  }
  while (!stack.empty()) {
    auto const s = stack.back();
    stack.pop_back();
    if (sub.contains(s)) {
      continue;
    }
    sub.insert(s.dim, s.gen);
    for (int i = 0; s.dim > 0 && i <= s.dim; ++i) {
      auto const f = ambient.generator_face(s.dim, s.gen, i);
      stack.push_back(SimplexKey::nondegenerate(f.generator_dim(), f.gen));
    }
  }
  return sub;
}

Subcomplex Subcomplex::from_chains(
    OrderedComplex const& ambient,
    std::vector<std::vector<VertexId>> const& chains) {
  std::vector<SimplexKey> keys;
  for (auto const& c : chains) {
    auto g = ambient.find(c);
    if (!g) {
      throw ContractViolation("chain is not a simplex of the ambient complex");
    }
    keys.push_back(SimplexKey::nondegenerate(static_cast<int>(c.size()) - 1, *g));
  }
  return generated_by(ambient, keys);
}

bool Subcomplex::contains(int dim, std::size_t gen) const {
  return dim >= 0 && static_cast<std::size_t>(dim) < members_.size() &&
         gen < members_[static_cast<std::size_t>(dim)].size() &&
         members_[static_cast<std::size_t>(dim)][gen];
}

void Subcomplex::insert(int dim, std::size_t gen) {
  if (!(dim >= 0 && static_cast<std::size_t>(dim) < members_.size() &&
        gen < members_[static_cast<std::size_t>(dim)].size())) {
    throw ContractViolation("generator out of range");
  }
  members_[static_cast<std::size_t>(dim)][gen] = true;
}

bool Subcomplex::is_face_closed(Complex const& ambient) const {
  for (int d = 1; d <= ambient.dimension(); ++d) {
    for (std::size_t g = 0; g < ambient.size(d); ++g) {
      if (!contains(d, g)) {
        continue;
      }
      for (int i = 0; i <= d; ++i) {
        if (!contains(ambient.generator_face(d, g, i))) {
          return false;
        }
      }
    }
  }
  return true;
}

InclusionVerdict is_simple_inclusion(Subcomplex const& sub,
                                     Complex const& ambient) {
  if (!sub.is_face_closed(ambient)) {
    throw ContractViolation("subcomplex is not closed under faces");
  }
  auto const rel = preceq(ambient);
  std::vector<VertexId> sub_vertices;
  for (VertexId v = 0; v < ambient.vertex_count(); ++v) {
    if (sub.contains(0, v)) {
      sub_vertices.push_back(v);
    }
  }

  InclusionVerdict verdict;
  for (std::size_t e = 0; e < ambient.size(1); ++e) {
    if (sub.contains(1, e)) {
      continue;
    }
    auto const& v = ambient.generator_vertices(1, e);
    for (VertexId u : sub_vertices) {
      if (!rel.related(u, v[0])) {
        continue;
      }
      for (VertexId w : sub_vertices) {
        if (!rel.related(v[1], w)) {
          continue;
        }
        verdict.simple = false;
        verdict.offending = SimplexKey::nondegenerate(1, e);
        verdict.path = *directed_path(ambient, u, v[0]);
        auto tail = *directed_path(ambient, v[1], w);
        verdict.path.insert(verdict.path.end(), tail.begin(), tail.end());
        verdict.reason = "an edge on a path between subcomplex vertices is missing";
        return verdict;
      }
    }
  }
  for (int d = 1; d <= ambient.dimension(); ++d) {
    for (std::size_t g = 0; g < ambient.size(d); ++g) {
      if (sub.contains(d, g)) {
        continue;
      }
      auto const& v = ambient.generator_vertices(d, g);
      if (sub.contains(0, v.front()) && sub.contains(0, v.back())) {
        verdict.simple = false;
        verdict.offending = SimplexKey::nondegenerate(d, g);
        verdict.path = v;
        verdict.reason = "a simplex with endpoints in the subcomplex is missing";
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace rigidify

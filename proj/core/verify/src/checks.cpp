#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "rigidify/category.hpp"
#include "rigidify/comonad.hpp"
#include "rigidify/fixtures.hpp"
#include "rigidify/homology.hpp"
#include "rigidify/nerve.hpp"
#include "rigidify/oracles.hpp"
#include "rigidify/verify.hpp"

namespace rigidify::verify {

namespace {

std::string join(std::vector<std::size_t> const& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    out += (k ? "," : "") + std::to_string(v[k]);
  }
  return out + "]";
}

Outcome example54() {
  auto const s = standard_ordered("two_triangles");
  auto const ms = mapping_space(s, 0, 3);
  auto const f = ms.f_vector();
  if (f != std::vector<std::size_t>{3, 2}) {
    return {false, "f-vector " + join(f) + ", expected [3,2]"};
  }
  auto const end0 = ms.complex.generator_face(1, 0, 0);
  auto const end1 = ms.complex.generator_face(1, 1, 0);
  if (end0 != end1) {
    return {false, "the two edges end at different vertices"};
  }
  auto const u = ms.decode(end0);
  bool const is_u = u.necklace().beads() == std::vector<int>{1, 1, 1} &&
                    u.map().vertices == std::vector<VertexId>{0, 1, 2, 3} &&
                    u.flag().size() == 1 && u.flag()[0] == u.necklace().vertices();
  if (!is_u) {
    return {false, "shared final vertex is not [U; {0,1,2,3}]"};
  }
  // The edge over V = Δ¹ ∨ Δ² starts at [T; {0,1,3}] with T = Δ¹ ∨ Δ¹.
  for (std::size_t g = 0; g < 2; ++g) {
    auto const e = ms.simplices[1][g];
    if (e.necklace().beads() == std::vector<int>{1, 2}) {
      auto const start = face(s, e, 1);
      if (start.necklace().beads() != std::vector<int>{1, 1} ||
          start.map().vertices != std::vector<VertexId>{0, 1, 3}) {
        return {false, "d1 of the [1,2] edge is not [T; (0,1,3)]"};
      }
      return {true, "f-vector [3,2]; both edges end at [U;{0,1,2,3}]"};
    }
  }
  return {false, "no edge over the necklace [1,2]"};
}

Outcome cube_theorem() {
  std::size_t pairs = 0;
  for (auto const& t : oracle::necklaces_up_to(6)) {
    auto const as_complex = oracle::necklace_complex(t);
    for (VertexId a = 0; a < t.vertex_count(); ++a) {
      for (VertexId b = a; b < t.vertex_count(); ++b) {
        ++pairs;
        auto const cube = necklace_mapping_space(t, a, b);
        int const n = static_cast<int>((t.vertices_between(a, b) - t.joints_between(a, b)).size());
        auto const brute = oracle::strict_chain_counts(n);
        auto const counted = cube.complex.f_vector();
        auto const full = mapping_space(as_complex, a, b).f_vector();
        std::string const where = "necklace " + join(std::vector<std::size_t>(
                                      t.beads().begin(), t.beads().end())) +
                                  " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (counted != brute) {
          return {false, where + ": cube nerve " + join(counted) + " vs chains " + join(brute)};
        }
        if (full != brute) {
          return {false, where + ": mapping space " + join(full) + " vs chains " + join(brute)};
        }
        if (!is_homology_point(cube.complex)) {
          return {false, where + ": not a homology point"};
        }
      }
    }
  }
  return {true, std::to_string(pairs) + " necklace pairs match brute-force chain counts"};
}

Outcome boundaries_and_horns() {
  std::size_t isos = 0;
  for (int n = 1; n <= 4; ++n) {
    auto const boundary = standard_ordered("boundary", {n});
    auto const simplex = standard_ordered("simplex", {n});
    std::vector<VertexId> id(static_cast<std::size_t>(n) + 1);
    for (std::size_t v = 0; v < id.size(); ++v) {
      id[v] = v;
    }
    OrderedMap const include(boundary, simplex, id);
    for (VertexId i = 0; i <= static_cast<VertexId>(n); ++i) {
      for (VertexId j = i; j <= static_cast<VertexId>(n); ++j) {
        if (i == 0 && j == static_cast<VertexId>(n)) {
          continue;
        }
        auto const src = mapping_space(boundary, i, j);
        auto const dst = mapping_space(simplex, i, j);
        auto const m = induced_space_map(include, src, dst);
        if (!is_isomorphism(m, src.complex, dst.complex)) {
          return {false, "boundary " + std::to_string(n) + " at (" + std::to_string(i) +
                             "," + std::to_string(j) + ") is not isomorphic"};
        }
        ++isos;
      }
    }
    if (n >= 2) {
      auto const h = homology(mapping_space(boundary, 0, static_cast<VertexId>(n)).complex);
      if (!h.is_sphere(n - 2)) {
        return {false, "boundary " + std::to_string(n) + " (0,n) has homology " + h.to_string()};
      }
      for (int k = 1; k < n; ++k) {
        auto const horn = standard_ordered("horn", {n, k});
        if (!is_homology_point(mapping_space(horn, 0, static_cast<VertexId>(n)).complex)) {
          return {false, "horn " + std::to_string(n) + "," + std::to_string(k) +
                             " (0,n) is not a homology point"};
        }
      }
    }
  }
  return {true, std::to_string(isos) + " isomorphisms; spheres S^0..S^2; horns are points"};
}

Outcome comonad() {
  std::size_t compared = 0;
  for (int n = 0; n <= 3; ++n) {
    auto const simplex = standard_ordered("simplex", {n});
    for (int level = 0; level <= 2; ++level) {
      for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
        for (std::size_t j = i; j <= static_cast<std::size_t>(n); ++j) {
          auto const lc = comonad_level(n, level, i, j);
          std::uint64_t expected = 1;
          if (i < j) {
            int const m = static_cast<int>(j - i) - 1;
            expected = chain_count(m, level);
            if (expected != oracle::weak_chain_count(m, level)) {
              return {false, "chain_count disagrees with brute force at m=" + std::to_string(m)};
            }
            auto const space = mapping_space(simplex, i, j);
            if (space.complex.simplices(level).size() != expected) {
              return {false, "mapping space level size differs from chain count"};
            }
          }
          if (lc.count != expected) {
            return {false, "n=" + std::to_string(n) + " level=" + std::to_string(level) +
                               " (" + std::to_string(i) + "," + std::to_string(j) +
                               "): " + std::to_string(lc.count) + " vs " +
                               std::to_string(expected)};
          }
          ++compared;
        }
      }
    }
  }
  return {true, std::to_string(compared) + " hom-sets agree with (l+2)^(j-i-1)"};
}

Outcome canonical_forms() {
  auto const a = oracle::random_zigzags(standard_ordered("two_triangles"), 600, 4, 0x5eed1);
  auto const b = oracle::random_zigzags(standard_ordered("simplex", {4}), 600, 4, 0x5eed2);
  bool const ok = a.mismatches == 0 && b.mismatches == 0 && a.not_idempotent == 0 &&
                  b.not_idempotent == 0 && a.triples + b.triples >= 1000;
  return {ok, "two_triangles: " + a.detail + "; simplex 4: " + b.detail};
}

Outcome quotient() {
  std::vector<std::pair<std::string, OrderedComplex>> cases = {
      {"simplex 2", standard_ordered("simplex", {2})},
      {"simplex 3", standard_ordered("simplex", {3})},
      {"two_triangles", standard_ordered("two_triangles")},
      {"boundary 3", standard_ordered("boundary", {3})},
      {"horn 3 1", standard_ordered("horn", {3, 1})},
      {"square", product(standard_ordered("simplex", {1}), standard_ordered("simplex", {1}))},
  };
  std::string detail;
  for (auto const& [name, s] : cases) {
    auto const r = oracle::quotient_classes(s, 2);
    if (!r.bijective) {
      return {false, name + ": " + r.detail};
    }
    detail += (detail.empty() ? "" : "; ") + name + " " + std::to_string(r.classes);
  }
  return {true, "classes = mapping-space simplices: " + detail};
}

Outcome category_laws() {
  std::size_t triples = 0;
  std::size_t pairs = 0;
  for (auto const& s : {standard_ordered("two_triangles"), standard_ordered("simplex", {4})}) {
    auto const cat = categorify(s);
    std::size_t const n = cat.object_count();
    auto gens = [&](VertexId a, VertexId b, std::size_t d) -> std::vector<MappingSimplex> const& {
      static std::vector<MappingSimplex> const none;
      auto const& sp = cat.hom(a, b).simplices;
      return d < sp.size() ? sp[d] : none;
    };
    // Simplicial identities in every mapping space.
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = 0; b < n; ++b) {
        auto const& sp = cat.hom(a, b).simplices;
        for (std::size_t d = 0; d < sp.size(); ++d) {
          int const dim = static_cast<int>(d);
          for (auto const& x : sp[d]) {
            for (int j = 0; j <= dim; ++j) {
              auto const sj = degeneracy(x, j);
              for (int i = 0; i <= dim + 1; ++i) {
                auto const dis = face(s, sj, i);
                bool ok = true;
                if (i == j || i == j + 1) {
                  ok = dis == x;
                } else if (i < j) {
                  ok = dis == degeneracy(face(s, x, i), j - 1);
                } else {
                  ok = dis == degeneracy(face(s, x, i - 1), j);
                }
                if (!ok) {
                  return {false, "d_i s_j identity fails"};
                }
              }
              for (int i = 0; i <= j; ++i) {
                if (degeneracy(degeneracy(x, j), i) != degeneracy(degeneracy(x, i), j + 1)) {
                  return {false, "s_i s_j identity fails"};
                }
              }
            }
            for (int j = 1; j <= dim && dim >= 2; ++j) {
              for (int i = 0; i < j; ++i) {
                if (face(s, face(s, x, j), i) != face(s, face(s, x, i), j - 1)) {
                  return {false, "d_i d_j identity fails"};
                }
              }
            }
          }
        }
      }
    }
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = 0; b < n; ++b) {
        for (VertexId c = 0; c < n; ++c) {
          for (std::size_t d = 0; d < 4; ++d) {
            auto const& fs = gens(a, b, d);
            auto const& gs = gens(b, c, d);
            int const dim = static_cast<int>(d);
            for (std::size_t gi = 0; gi < gs.size(); ++gi) {
              for (std::size_t fi = 0; fi < fs.size(); ++fi) {
                auto const& g = gs[gi];
                auto const& f = fs[fi];
                auto const gf = compose(s, g, f);
                ++pairs;
                if (cat.hom(a, c).find(gf) != cat.composition(a, b, c, dim, gi, fi)) {
                  return {false, "composition table disagrees with compose"};
                }
                for (int i = 0; i <= dim && dim >= 1; ++i) {
                  if (face(s, gf, i) != compose(s, face(s, g, i), face(s, f, i))) {
                    return {false, "composition does not commute with faces"};
                  }
                }
                for (int i = 0; i <= dim; ++i) {
                  if (degeneracy(gf, i) != compose(s, degeneracy(g, i), degeneracy(f, i))) {
                    return {false, "composition does not commute with degeneracies"};
                  }
                }
                if (compose(s, identity_simplex(s, c, dim), g) != g ||
                    compose(s, f, identity_simplex(s, a, dim)) != f) {
                  return {false, "unit law fails"};
                }
                for (VertexId e = 0; e < n; ++e) {
                  for (auto const& h : gens(c, e, d)) {
                    ++triples;
                    if (compose(s, h, gf) != compose(s, compose(s, h, g), f)) {
                      return {false, "associativity fails"};
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(pairs) + " composable pairs, " + std::to_string(triples) +
                    " triples"};
}

Outcome products() {
  auto const d1 = standard_ordered("simplex", {1});
  auto const d2 = standard_ordered("simplex", {2});
  auto const square = product(d1, d1);
  std::vector<std::tuple<std::string, OrderedComplex const*, OrderedComplex const*>> cases = {
      {"D1xD1", &d1, &d1}, {"D2xD1", &d2, &d1}, {"D1xD1xD1", &square, &d1}};
  std::size_t spaces = 0;
  for (auto const& [name, x, y] : cases) {
    auto const p = product(*x, *y);
    std::size_t const ny = y->vertex_count();
    std::vector<VertexId> px;
    std::vector<VertexId> py;
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
      px.push_back(v / ny);
      py.push_back(v % ny);
    }
    OrderedMap const to_x(p, *x, px);
    OrderedMap const to_y(p, *y, py);
    auto const rel = preceq(p);
    for (VertexId a = 0; a < p.vertex_count(); ++a) {
      for (VertexId b = 0; b < p.vertex_count(); ++b) {
        if (!rel.related(a, b)) {
          continue;
        }
        ++spaces;
        auto const ms = mapping_space(p, a, b);
        std::string const where = name + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (!is_homology_point(ms.complex)) {
          return {false, where + " is not a homology point"};
        }
        auto const mx = mapping_space(*x, px[a], px[b]);
        auto const my = mapping_space(*y, py[a], py[b]);
        auto const cx = pi0(mx.complex);
        auto const cy = pi0(my.complex);
        auto const cp = pi0(ms.complex);
        std::map<std::size_t, std::pair<std::size_t, std::size_t>> image;
        std::set<std::pair<std::size_t, std::size_t>> hit;
        for (std::size_t v = 0; v < ms.simplices[0].size(); ++v) {
          auto const ix = *mx.find(induced_map(to_x, ms.simplices[0][v]));
          auto const iy = *my.find(induced_map(to_y, ms.simplices[0][v]));
          std::pair<std::size_t, std::size_t> const pair{cx.component_of[ix], cy.component_of[iy]};
          auto [it, fresh] = image.emplace(cp.component_of[v], pair);
          if (!fresh && it->second != pair) {
            return {false, where + ": map on components is not well defined"};
          }
          hit.insert(pair);
        }
        if (image.size() != cp.count || hit.size() != image.size() ||
            hit.size() != cx.count * cy.count) {
          return {false, where + ": pi0 comparison is not a bijection"};
        }
      }
    }
  }
  return {true, std::to_string(spaces) + " mapping spaces are homology points with pi0 bijections"};
}

Outcome inclusions() {
  auto const d1 = standard_ordered("simplex", {1});
  auto const square = product(d1, d1);
  std::size_t simple = 0;
  std::size_t total = 0;
  for (std::size_t g = 0; g < square.size(1); ++g) {
    auto const sub = Subcomplex::generated_by(square, {SimplexKey::nondegenerate(1, g)});
    ++total;
    simple += is_simple_inclusion(sub, square).simple ? 1 : 0;
  }
  auto const loop = standard("loop");
  bool const loop_ordered = is_ordered(as_complex(loop)).ordered;
  bool const ok = total == 5 && simple == 4 && !loop_ordered;
  return {ok, std::to_string(simple) + " of " + std::to_string(total) +
                  " edges simple; loop " + (loop_ordered ? "ordered" : "not ordered")};
}

Outcome nerve() {
  auto const cat = categorify(standard_ordered("simplex", {1}));
  auto const nv = coherent_nerve_truncated(cat, 3);
  // Classical nerve of [1]: monotone maps [n] -> [1].
  std::vector<std::size_t> classical;
  for (int n = 0; n <= 3; ++n) {
    std::size_t count = 0;
    for (std::uint32_t bits = 0; bits < (1U << (n + 1)); ++bits) {
      bool monotone = true;
      for (int t = 0; t < n; ++t) {
        if ((bits >> t & 1U) > (bits >> (t + 1) & 1U)) {
          monotone = false;
        }
      }
      count += monotone ? 1 : 0;
    }
    classical.push_back(count);
  }
  auto const counts = nv.counts();
  if (counts != classical) {
    return {false, "levels " + join(counts) + " vs classical nerve " + join(classical)};
  }
  auto const report = inner_horn_check(nv.as_levels(), 3);
  if (!report.ok()) {
    return {false, std::to_string(report.failure_count) + " unfillable inner horns"};
  }
  return {true, "levels " + join(counts) + "; " + std::to_string(report.horns_checked) +
                    " inner horns filled"};
}

}  // namespace

std::vector<Check> const& acceptance_checks() {
  static std::vector<Check> const checks = {
      {1, "example54", "two_triangles mapping space (0,3)", example54},
      {2, "cube", "necklace mapping spaces are cube nerves", cube_theorem},
      {3, "boundary", "boundaries and horns of simplices", boundaries_and_horns},
      {4, "cube", "comonad levels against chain counts", comonad},
      {5, "canonical", "canonical form is constant on zig-zags", canonical_forms},
      {6, "quotient", "brute-force quotient matches mapping spaces", quotient},
      {7, "laws", "simplicial category laws", category_laws},
      {8, "products", "products: homology points and pi0", products},
      {9, "inclusions", "simple edge inclusions and the loop", inclusions},
      {10, "nerve", "coherent nerve of categorify(simplex 1)", nerve},
  };
  return checks;
}

std::vector<std::string> suites() {
  std::vector<std::string> out;
  for (auto const& c : acceptance_checks()) {
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) {
      out.push_back(c.suite);
    }
  }
  return out;
}

std::vector<CheckResult> run_checks(std::string const& only) {
  std::vector<CheckResult> out;
  for (auto const& c : acceptance_checks()) {
    if (!only.empty() && only != c.suite && only != std::to_string(c.id)) {
      continue;
    }
    CheckResult r{c.id, c.suite, c.title, false, {}, 0.0};
    auto const start = std::chrono::steady_clock::now();
    try {
      auto const o = c.run();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (std::exception const& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(CheckResult const& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " +
         r.suite + ": " + r.title + " (" + time + " s) " + r.detail;
}

}  // namespace rigidify::verify

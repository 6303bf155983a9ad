#include "rigidify/fixtures.hpp"

#include <numeric>
#include <set>

#include "rigidify/errors.hpp"

namespace rigidify {

namespace {

std::vector<VertexId> iota_chain(int n) {
  std::vector<VertexId> c(static_cast<std::size_t>(n) + 1);
  std::iota(c.begin(), c.end(), VertexId{0});
  return c;
}

void expect_params(std::string const& name, std::vector<int> const& params,
                   std::size_t count) {
  if (params.size() != count) {
    throw InvalidInput("fixture '" + name + "' takes " + std::to_string(count) +
                       " parameter(s)");
  }
}

GeneratedComplex loop() {
  GeneratedComplex::Builder b;
  auto const v = b.add_generator(0, "v");
  auto const e = b.add_generator(1, "e");
  b.set_face(1, e, 0, SimplexKey::vertex(v));
  b.set_face(1, e, 1, SimplexKey::vertex(v));
  return std::move(b).build();
}

GeneratedComplex parallel_edges() {
  GeneratedComplex::Builder b;
  b.add_generator(0, "0");
  b.add_generator(0, "1");
  for (char const* label : {"e", "f"}) {
    auto const g = b.add_generator(1, label);
    b.set_face(1, g, 0, SimplexKey::vertex(1));
    b.set_face(1, g, 1, SimplexKey::vertex(0));
  }
  return std::move(b).build();
}

// All lattice paths with unit steps from (0,0) to (p,q).
void staircases(std::size_t p, std::size_t q, std::vector<std::pair<std::size_t, std::size_t>>& cur,
                std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
  auto const [i, j] = cur.back();
  if (i == p && j == q) {
    out.push_back(cur);
    return;
  }
  if (i < p) {
    cur.emplace_back(i + 1, j);
    staircases(p, q, cur, out);
    cur.pop_back();
  }
  if (j < q) {
    cur.emplace_back(i, j + 1);
    staircases(p, q, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Complex const& as_complex(AnyComplex const& c) {
  return std::visit([](auto const& x) -> Complex const& { return x; }, c);
}

AnyComplex standard(std::string const& name, std::vector<int> const& params) {
  if (name == "simplex" || name == "delta") {
    expect_params(name, params, 1);
    if (params[0] < 0) {
      throw InvalidInput("simplex dimension must be nonnegative");
    }
    return OrderedComplex::from_maximal_chains({iota_chain(params[0])});
  }
  if (name == "boundary") {
    expect_params(name, params, 1);
    int const n = params[0];
    if (n < 1) {
      throw InvalidInput("boundary needs n >= 1");
    }
    std::vector<std::vector<VertexId>> chains;
    for (int i = 0; i <= n; ++i) {
      auto c = iota_chain(n);
      c.erase(c.begin() + i);
      chains.push_back(std::move(c));
    }
    return OrderedComplex::from_maximal_chains(chains, static_cast<std::size_t>(n) + 1);
  }
  if (name == "horn") {
    expect_params(name, params, 2);
    int const n = params[0];
    int const k = params[1];
    if (n < 2 || k < 0 || k > n) {
      throw InvalidInput("horn needs n >= 2 and 0 <= k <= n");
    }
    std::vector<std::vector<VertexId>> chains;
    for (int i = 0; i <= n; ++i) {
      if (i == k) {
        continue;
      }
      auto c = iota_chain(n);
      c.erase(c.begin() + i);
      chains.push_back(std::move(c));
    }
    return OrderedComplex::from_maximal_chains(chains, static_cast<std::size_t>(n) + 1);
  }
  if (name == "two_triangles") {
    expect_params(name, params, 0);
    return OrderedComplex::from_maximal_chains({{0, 1, 2}, {1, 2, 3}});
  }
  if (name == "loop") {
    expect_params(name, params, 0);
    return loop();
  }
  if (name == "parallel_edges") {
    expect_params(name, params, 0);
    return parallel_edges();
  }
  throw InvalidInput("unknown fixture '" + name + "'");
}

OrderedComplex standard_ordered(std::string const& name,
                                std::vector<int> const& params) {
  auto c = standard(name, params);
  if (auto* o = std::get_if<OrderedComplex>(&c)) {
    return std::move(*o);
  }
  throw InvalidInput("fixture '" + name + "' is not ordered");
}

OrderedComplex product(OrderedComplex const& x, OrderedComplex const& y) {
  std::size_t const ny = y.vertex_count();
  std::set<std::vector<VertexId>> chains;
  for (auto const& cx : x.maximal_chains()) {
    for (auto const& cy : y.maximal_chains()) {
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> paths;
      std::vector<std::pair<std::size_t, std::size_t>> cur{{0, 0}};
      staircases(cx.size() - 1, cy.size() - 1, cur, paths);
      for (auto const& path : paths) {
        std::vector<VertexId> chain;
        for (auto [i, j] : path) {
          chain.push_back(cx[i] * ny + cy[j]);
        }
        chains.insert(std::move(chain));
      }
    }
  }
  return OrderedComplex::from_maximal_chains(
      {chains.begin(), chains.end()}, x.vertex_count() * ny);
}

}  // namespace rigidify

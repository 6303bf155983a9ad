#include "rigidify/comonad.hpp"

#include "rigidify/errors.hpp"

namespace rigidify {

std::string PathTerm::to_string() const {
  if (steps.empty()) {
    return std::to_string(source) + ">" + std::to_string(target);
  }
  std::string out = "(";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    out += (k ? " " : "") + steps[k].to_string();
  }
  return out + ")";
}

namespace {

void check_range(int n, int level, std::size_t i, std::size_t j) {
  if (n < 0 || n > 4 || level < 0 || level > 3) {
    throw ContractViolation("comonad levels need n <= 4 and level <= 3");
  }
  if (i > static_cast<std::size_t>(n) || j > static_cast<std::size_t>(n)) {
    throw ContractViolation("object out of range");
  }
}

// hom[i][j] = non-identity morphisms i -> j at the current level.
using Homs = std::vector<std::vector<std::vector<PathTerm>>>;

Homs poset(std::size_t n) {
  Homs out(n + 1, std::vector<std::vector<PathTerm>>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      out[i][j].push_back(PathTerm{i, j, {}});
    }
  }
  return out;
}

// F U: paths of non-identity arrows become the new non-identity arrows.
Homs free_on_underlying(Homs const& below) {
  std::size_t const size = below.size();
  Homs out(size, std::vector<std::vector<PathTerm>>(size));
  std::vector<PathTerm> path;
  for (std::size_t start = 0; start < size; ++start) {
    auto walk = [&](auto&& self, std::size_t at) -> void {
      for (std::size_t next = 0; next < size; ++next) {
        for (auto const& arrow : below[at][next]) {
          path.push_back(arrow);
          out[start][next].push_back(PathTerm{start, next, path});
          self(self, next);
          path.pop_back();
        }
      }
    };
    walk(walk, start);
  }
  return out;
}

}  // namespace

std::vector<PathTerm> comonad_morphisms(int n, int level, std::size_t i,
                                        std::size_t j) {
  check_range(n, level, i, j);
  Homs homs = poset(static_cast<std::size_t>(n));
  for (int l = 0; l <= level; ++l) {
    homs = free_on_underlying(homs);
  }
  return homs[i][j];
}

LevelCount comonad_level(int n, int level, std::size_t i, std::size_t j) {
  LevelCount out{n, level, i, j, 0};
  out.count = comonad_morphisms(n, level, i, j).size() + (i == j ? 1 : 0);
  return out;
}

std::uint64_t chain_count(int m, int level) {
  if (m < 0 || level < 0) {
    throw ContractViolation("chain_count needs m, level >= 0");
  }
  std::uint64_t out = 1;
  for (int k = 0; k < m; ++k) {
    out *= static_cast<std::uint64_t>(level) + 2;
  }
  return out;
}

}  // namespace rigidify

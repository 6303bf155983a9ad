#include "rigidify/horn.hpp"

#include <map>
#include <set>

#include "rigidify/errors.hpp"

namespace rigidify {

SimplicialLevels SimplicialLevels::of(Complex const& complex, int dmax) {
  if (dmax < 0) {
    throw ContractViolation("level bound must be nonnegative");
  }
  SimplicialLevels out;
  std::vector<std::map<SimplexKey, std::size_t>> index;
  for (int n = 0; n <= dmax; ++n) {
    auto const keys = complex.simplices(n);
    out.counts.push_back(keys.size());
    auto& idx = index.emplace_back();
    for (std::size_t x = 0; x < keys.size(); ++x) {
      idx.emplace(keys[x], x);
    }
    auto& table = out.faces.emplace_back();
    if (n == 0) {
      continue;
    }
    table.reserve(keys.size());
    for (auto const& key : keys) {
      auto& row = table.emplace_back();
      for (int i = 0; i <= n; ++i) {
        row.push_back(index[static_cast<std::size_t>(n) - 1].at(complex.face(key, i)));
      }
    }
  }
  return out;
}

HornReport inner_horn_check(SimplicialLevels const& levels, int dmax) {
  if (dmax < 2 || dmax > 4 || dmax > levels.top()) {
    throw ContractViolation("horn check needs 2 <= dmax <= 4 within the levels");
  }
  HornReport report;
  report.dmax = dmax;
  for (int n = 2; n <= dmax; ++n) {
    auto const un = static_cast<std::size_t>(n);
    auto const& lower = levels.faces[un - 1];
    std::size_t const count = levels.counts[un - 1];
    // by_d0[f] = simplices y of level n-1 with d_0 y = f.
    std::vector<std::vector<std::size_t>> by_d0(levels.counts[un - 2]);
    for (std::size_t y = 0; y < count; ++y) {
      by_d0[lower[y][0]].push_back(y);
    }
    for (int k = 1; k < n; ++k) {
      auto const uk = static_cast<std::size_t>(k);
      std::set<std::vector<std::size_t>> filled;
      for (auto const& row : levels.faces[un]) {
        auto horn = row;
        horn[uk] = HornFailure::missing;
        filled.insert(std::move(horn));
      }
      std::vector<std::size_t> horn(un + 1, HornFailure::missing);
      // d_i x_j = d_{j-1} x_i for i < j, both different from k.
      auto consistent = [&](std::size_t j, std::size_t y) {
        for (std::size_t i = 0; i < j; ++i) {
          if (i == uk) {
            continue;
          }
          if (lower[y][i] != lower[horn[i]][j - 1]) {
            return false;
          }
        }
        return true;
      };
      auto place = [&](auto&& self, std::size_t j) -> void {
        if (j == un + 1) {
          ++report.horns_checked;
          if (!filled.count(horn)) {
            ++report.failure_count;
            if (report.failures.size() < 8) {
              report.failures.push_back(HornFailure{n, k, horn});
            }
          }
          return;
        }
        if (j == uk) {
          self(self, j + 1);
          return;
        }
        if (j == 0) {
          for (std::size_t y = 0; y < count; ++y) {
            horn[0] = y;
            self(self, 1);
          }
        } else {
          // k >= 1, so x_0 is always placed and narrows the search.
          for (std::size_t y : by_d0[lower[horn[0]][j - 1]]) {
            if (consistent(j, y)) {
              horn[j] = y;
              self(self, j + 1);
            }
          }
        }
        horn[j] = HornFailure::missing;
      };
      place(place, 0);
    }
  }
  return report;
}

}  // namespace rigidify

#include "rigidify/simplex.hpp"

#include <algorithm>
#include <functional>

#include "rigidify/errors.hpp"

namespace rigidify {

DegeneracyWord DegeneracyWord::from_indices(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end(), std::greater<>());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw ContractViolation("degeneracy word has a repeated index");
  }
  if (!indices.empty() && indices.back() < 0) {
    throw ContractViolation("degeneracy word has a negative index");
  }
  return DegeneracyWord(std::move(indices));
}

DegeneracyWord DegeneracyWord::from_surjection(std::span<int const> values) {
  if (!is_monotone_surjection(values)) {
    throw ContractViolation("not a monotone surjection");
  }
  std::vector<int> repeats;
  for (std::size_t t = values.size(); t-- > 1;) {
    if (values[t] == values[t - 1]) {
      repeats.push_back(static_cast<int>(t - 1));
    }
  }
  return DegeneracyWord(std::move(repeats));
}

std::vector<int> DegeneracyWord::to_surjection(int base_dim) const {
  int const n = base_dim + static_cast<int>(indices_.size());
  if (!indices_.empty() && indices_.front() >= n) {
    throw ContractViolation("degeneracy index exceeds simplex dimension");
  }
  std::vector<bool> repeat(static_cast<std::size_t>(n) + 1, false);
  for (int i : indices_) {
    repeat[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> values(static_cast<std::size_t>(n) + 1, 0);
  for (int t = 1; t <= n; ++t) {
    values[t] = values[t - 1] + (repeat[t - 1] ? 0 : 1);
  }
  return values;
}

std::string DegeneracyWord::to_string() const {
  std::string out;
  for (int i : indices_) {
    out += 's';
    out += std::to_string(i);
  }
  return out;
}

bool is_monotone_surjection(std::span<int const> values) {
  if (values.empty() || values.front() != 0) {
    return false;
  }
  for (std::size_t t = 1; t < values.size(); ++t) {
    int const step = values[t] - values[t - 1];
    if (step != 0 && step != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace rigidify

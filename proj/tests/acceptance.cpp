#include <iostream>
#include <string>

#include "rigidify/verify.hpp"

int main(int argc, char** argv) {
  std::string const only = argc > 1 ? argv[1] : "";
  auto const results = rigidify::verify::run_checks(only);
  std::size_t passed = 0;
  for (auto const& r : results) {
    std::cout << rigidify::verify::format_line(r) << "\n";
    passed += r.passed ? 1 : 0;
  }
  std::cout << passed << " of " << results.size() << " acceptance criteria passed\n";
  return !results.empty() && passed == results.size() ? 0 : 1;
}

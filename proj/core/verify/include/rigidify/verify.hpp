#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace rigidify::verify {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Check {
  int id = 0;
  // Filter name accepted by --only.
  std::string suite;
  std::string title;
  std::function<Outcome()> run;
};

struct CheckResult {
  int id = 0;
  std::string suite;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<Check> const& acceptance_checks();

// Known suite names, in check order.
std::vector<std::string> suites();

// Runs the checks whose suite or numeric id equals `only` (all when empty).
// Exceptions inside a check count as failures.
std::vector<CheckResult> run_checks(std::string const& only = {});

// "PASS [2] cube: title (0.41 s) detail"
std::string format_line(CheckResult const& r);

}  // namespace rigidify::verify

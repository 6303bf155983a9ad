#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rigidify {

// Raised when a precondition of an operation is not met (bad index, mismatched
// endpoints, malformed flag, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when user supplied data does not describe a valid object.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a complex that must be ordered is not. Carries the directed
// cycle that breaks antisymmetry, when that is the reason.
class NotOrdered : public InvalidInput {
 public:
  NotOrdered(std::string const& what, std::vector<std::size_t> cycle)
      : InvalidInput(what), cycle_(std::move(cycle)) {}

  std::vector<std::size_t> const& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

}  // namespace rigidify

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ucycle {

// (n, t) fails the divisibility condition, so no ucycle can exist.
class InadmissibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction was asked for parameters outside the range it handles.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No object with the requested properties exists (or the input is not what
// it claims to be, e.g. an unverified cycle handed to a construction).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed .ucy text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

}  // namespace ucycle

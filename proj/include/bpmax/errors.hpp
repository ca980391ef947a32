#pragma once

#include <stdexcept>
#include <string>

namespace bpmax {

// Invalid mathematical input (x < 0, alpha <= -1, pole of Gamma, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An iteration or truncated series failed to reach its target tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree numerically did not.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bpmax

#pragma once

#include <stdexcept>
#include <string>

namespace mayer {

// Bad argument to a geometry, graph or sampler call.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two sphere surfaces that do not cross (disjoint, tangent-free nesting, ...).
class NoIntersection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedOrder : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnsupportedGraph : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature or series evaluation that did not reach its tolerance.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed shape/graph literal. `position` is the 0-based offset of the
// offending token in the input string.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mayer

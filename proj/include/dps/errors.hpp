#pragma once

#include <stdexcept>
#include <string>

namespace dps {

/// Structurally invalid input: bad field/exponent combination, malformed
/// grammar, out-of-range sizes. The CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well-formed but outside an operation's domain, e.g. a transform
/// parameter in the divergent range. The CLI maps this to exit code 3.
class precondition_error : public std::domain_error {
 public:
  explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace dps

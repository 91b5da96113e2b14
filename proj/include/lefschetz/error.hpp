#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Raised when an input violates an operation's precondition (composite
/// characteristic, exponent out of range, witness requested for an SLP
/// algebra, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lefschetz

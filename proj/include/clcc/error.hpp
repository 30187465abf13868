#pragma once

#include <stdexcept>
#include <string>

namespace clcc {

/// Raised when an input violates a domain precondition (malformed complex,
/// mismatched colour counts, a chain living in the wrong complex, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace clcc

#pragma once

#include <stdexcept>
#include <string>

namespace gtsp {

// An argument lies outside the range an operation supports (for example a
// vertex count too large for exhaustive enumeration).
class ScopeError : public std::domain_error {
 public:
  explicit ScopeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gtsp

#pragma once

#include <stdexcept>
#include <string>

namespace subsums {

/// Invalid argument, unparsable input, or a violated precondition.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Resource or representability guard: enumeration size, exponent range,
/// memory budget. Distinct from DomainError so callers (and the CLI exit
/// codes) can tell "bad input" from "input too big for this build".
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subsums

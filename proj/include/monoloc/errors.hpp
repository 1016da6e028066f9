#pragma once

#include <stdexcept>
#include <string>

namespace monoloc {

// Malformed input: bad dimensions, parse failures, elements outside a carrier.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured search or enumeration budget was exhausted.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency assertion failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_input(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline void require_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace monoloc

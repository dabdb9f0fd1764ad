#pragma once

#include <stdexcept>
#include <string>

namespace rrat {

// Malformed input documents, violated preconditions, unknown catalog names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size bound (group order, subgroup enumeration, cover rank) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A machine-checked postcondition failed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rrat

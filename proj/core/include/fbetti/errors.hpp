#pragma once

#include <stdexcept>
#include <string>

namespace fbetti {

/// Requested object exists mathematically but is not provided by the library.
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-audit failed. Indicates a bug, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fbetti

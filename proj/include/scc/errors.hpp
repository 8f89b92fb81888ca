#pragma once

#include <stdexcept>

namespace scc {

// Raised when a configured safety cap (round budget, retry budget) is hit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for unreadable or malformed input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scc

#pragma once

#include <stdexcept>
#include <string>

namespace canext {

/// Raised when an input violates the structural invariants of a type
/// (non-antisymmetric relation, out-of-range index, non-distributive lattice, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an enumeration would exceed its configured size cap.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace canext

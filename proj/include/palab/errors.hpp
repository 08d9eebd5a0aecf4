#pragma once

#include <stdexcept>
#include <string>

namespace palab {

// Malformed values: bad table shapes, out-of-range entries, broken files.
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size or budget cap was exceeded.
struct cap_error : std::length_error {
  explicit cap_error(const std::string& what) : std::length_error(what) {}
};

// A check was invoked on an algebra that fails the check's stated
// precondition (e.g. a term-witness derivation on a non-cancellable algebra).
struct precondition_error : std::domain_error {
  explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace palab

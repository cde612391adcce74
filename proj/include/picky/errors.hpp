#pragma once

#include <stdexcept>
#include <string>

namespace picky {

/// Malformed input: bad permutation, unknown group name, unreadable file.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound would be exceeded.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed, or a verified structure failed
/// its invariants. Always an engine bug or corrupt data.
class InternalInconsistency : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Precondition of an operation violated (g not in G, H not a subgroup, ...).
class PreconditionError : public InputError {
public:
  using InputError::InputError;
};

} // namespace picky

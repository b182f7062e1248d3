#pragma once

#include <stdexcept>
#include <string>

namespace bioct {

/// Caller violated an operation's precondition (mismatched carriers, zero input, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is mathematically undefined for the given structure
/// (e.g. a determinant under a non-central involution).
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A list of operators failed to close under the commutator bracket.
class ClosureError : public std::runtime_error {
 public:
  ClosureError(const std::string& what, std::size_t a, std::size_t b)
      : std::runtime_error(what), first(a), second(b) {}
  std::size_t first;
  std::size_t second;
};

}  // namespace bioct

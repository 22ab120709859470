#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twolocal {

/// Operands live in different algebras (e.g. bracketing L[0] with e[1]).
class AlgebraMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed element or derivation literal. `position` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), message_(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

private:
  std::string message_;
  std::size_t position_;
};

/// The requested index window cannot hold the supports of the inputs.
class WindowTooSmall : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A probe (or its bracket) falls outside a windowed derivation's core range,
/// so Leibniz cannot be checked there. Not a Leibniz failure.
class WindowOverflow : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// A value-table map was queried at an element it does not store.
class UnknownProbe : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

}  // namespace twolocal

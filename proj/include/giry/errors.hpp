#pragma once

#include <stdexcept>
#include <string>

namespace giry {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values that were required to live on the same Space do not.
class SpaceMismatch : public Error {
 public:
  explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

/// A point label or index that does not belong to the Space at hand.
class UnknownPoint : public Error {
 public:
  explicit UnknownPoint(const std::string& what) : Error(what) {}
};

/// A value failed its construction invariant (negative weight, bad sum, ...).
class InvalidValue : public Error {
 public:
  explicit InvalidValue(const std::string& what) : Error(what) {}
};

/// rn_derivative was asked for a density that does not exist.
class NotAbsolutelyContinuous : public Error {
 public:
  explicit NotAbsolutelyContinuous(const std::string& what) : Error(what) {}
};

/// Malformed input text (rational literals, model files, candidate files).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// An internal identity that must hold exactly failed to.  Seeing this
/// exception means a bug, not bad input.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace giry

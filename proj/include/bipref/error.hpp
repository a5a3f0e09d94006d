#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bipref {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, query or theory-file text. `position` is a 0-based
/// character offset into the parsed text (or into the offending line).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  /// The description without the position suffix.
  const std::string& message() const { return message_; }
  std::size_t position() const { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A modal operator under another modal, a conditional, or an obligation.
class NestingError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Vocabulary, rule-set or model enumeration beyond the documented limits.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// The set of normality conditionals is incoherent.
class IncoherentError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (inconsistent input,
/// defaults present where none are allowed, kind mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bipref

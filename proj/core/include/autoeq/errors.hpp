#pragma once

#include <stdexcept>
#include <string>

namespace autoeq {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an operation's input does not hold (wrong power,
/// non-spherical generator, odd degrees, n above the configured cap, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The object lies outside the set on which the value rules determine an answer.
/// Raised instead of guessing.
class ClosureError : public DomainError {
 public:
  explicit ClosureError(const std::string& what)
      : DomainError("undetermined by the declared rules: " + what) {}
};

/// Malformed configuration or textual input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace autoeq

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hot {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed an argument outside an operation's contract (unknown id, bad range).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `location()` is a human-readable position
/// such as "line 3" or "byte 118".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string location)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Structurally well-formed input that breaks a model invariant.
/// `offenders()` lists the ids responsible.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, std::vector<std::string> offenders)
      : Error(message), offenders_(std::move(offenders)) {}

  const std::vector<std::string>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<std::string> offenders_;
};

/// Invalid configuration (parameters, provider setup, dimension mismatch).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Remote model backend failed after retries. `unit()` names the work item
/// (document, sentence, batch, pair) that could not be processed.
class ProviderError : public Error {
 public:
  ProviderError(const std::string& message, std::string unit)
      : Error(unit.empty() ? message : message + " [" + unit + "]"), unit_(std::move(unit)) {}

  const std::string& unit() const noexcept { return unit_; }

 private:
  std::string unit_;
};

}  // namespace hot

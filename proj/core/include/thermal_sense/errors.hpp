#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace thermal_sense {

// Root of every error the library throws. The CLI maps subclasses onto exit
// codes, so new error kinds should derive from one of the groups below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments to a pure operation (NaN pixel, negative minutes, k > n...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A class is too small to be split into the requested strata.
class StratificationError : public Error {
 public:
  using Error::Error;
};

// Simulator / classifier configuration that violates its invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// SMO did not converge, or gradient descent produced non-finite loss.
class TrainingError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. Carries the 1-based line number and the field.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::string field, const std::string& what)
      : Error("line " + std::to_string(line) + ", field '" + field +
              "': " + what),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// File written by a newer (or unknown) format revision.
class VersionError : public Error {
 public:
  using Error::Error;
};

// Out-of-order timestamps fed to the bed monitor.
class StreamError : public Error {
 public:
  using Error::Error;
};

}  // namespace thermal_sense

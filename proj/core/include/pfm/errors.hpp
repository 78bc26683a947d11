#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problems with caller-supplied data: malformed input, broken invariants,
/// mismatched shapes. Frontends map these to a "bad input" status.
class InputError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class InvalidAffine : public InputError {
 public:
  using InputError::InputError;
};

class ZeroDenominator : public InputError {
 public:
  using InputError::InputError;
};

/// A criterion whose scores carry no spread (σ = 0, or p_min = p_max).
class DegenerateCriterion : public InputError {
 public:
  DegenerateCriterion(std::size_t criterion, const std::string& label)
      : InputError("degenerate criterion '" + label + "' (index " + std::to_string(criterion) +
                   "): all alternatives share the same score"),
        criterion_(criterion) {}

  std::size_t criterion() const noexcept { return criterion_; }

 private:
  std::size_t criterion_;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& field, const std::string& what)
      : InputError(format(line, field, what)), line_(line), field_(field) {}

  /// 1-based line, or 0 when the location is a JSON path.
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(std::size_t line, const std::string& field, const std::string& what) {
    std::string out = "parse error";
    if (line > 0) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " (" + field + ")";
    return out + ": " + what;
  }

  std::size_t line_;
  std::string field_;
};

}  // namespace pfm

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbu {

class InvalidTruncation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidMeasure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested truncation drops more of a state's norm than allowed.
/// Carries the smallest truncation that would have been accepted.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(std::size_t given, std::size_t minimal)
      : std::runtime_error("truncation N=" + std::to_string(given) +
                           " too small; need N >= " + std::to_string(minimal)),
        given_(given),
        minimal_(minimal) {}

  std::size_t given() const noexcept { return given_; }
  std::size_t minimal() const noexcept { return minimal_; }

 private:
  std::size_t given_;
  std::size_t minimal_;
};

class SingularPoint : public std::domain_error {
 public:
  SingularPoint(double y, double pole)
      : std::domain_error("y=" + std::to_string(y) + " lies inside the exclusion radius of " +
                          std::to_string(pole)),
        y_(y) {}
  double y() const noexcept { return y_; }

 private:
  double y_;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gbu

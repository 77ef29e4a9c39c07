#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropf5 {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// A capped p-adic value had to be inverted (or used as a pivot) while being
// indistinguishable from zero at its known precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("leading term of the zero polynomial") {}
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class DuplicateSignature : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty input system") {}
};

class MaxDegreeExceeded : public Error {
 public:
  MaxDegreeExceeded(int degree, int cap)
      : Error("pair queue reached degree " + std::to_string(degree) +
              " above the configured cap " + std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  int degree() const noexcept { return degree_; }
  int cap() const noexcept { return cap_; }

 private:
  int degree_;
  int cap_;
};

// Wall-clock budget exhausted (bench timeouts).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InhomogeneousError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropf5

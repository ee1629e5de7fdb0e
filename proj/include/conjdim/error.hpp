#pragma once

#include <stdexcept>
#include <string>

namespace conjdim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("field mismatch") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when a construction hits a degenerate parameter choice.  Carries the
/// degree that was actually reached so callers can retry with new constants.
class DegenerateConstants : public Error {
 public:
  DegenerateConstants(const std::string& what, int achieved_degree)
      : Error(what), achieved_degree_(achieved_degree) {}
  int achieved_degree() const { return achieved_degree_; }

 private:
  int achieved_degree_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace conjdim

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperred {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the mathematical domain was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation hit a zero denominator factor.
class PoleError : public Error {
 public:
  explicit PoleError(std::string factor)
      : Error("pole: denominator factor (" + factor + ") vanishes"), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

// A step operator prefactor is identically zero.
class SingularOperator : public Error {
 public:
  using Error::Error;
};

// Parameters sit on an exceptional set where the generic operators break down.
class ExceptionalParameter : public Error {
 public:
  explicit ExceptionalParameter(std::string message, std::vector<std::string> violations = {})
      : Error(std::move(message)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A special-case rewrite was requested on a function that does not match its pattern.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

// A series was evaluated outside its convergence guard.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hyperred

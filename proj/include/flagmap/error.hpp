#ifndef FLAGMAP_ERROR_HPP
#define FLAGMAP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagmap {

enum class ErrorKind {
  InvalidArgument,
  Syntax,
  UndeclaredGenerator,
  Format,
  InvariantViolation,
  BoundExceeded,
  EnumerationOverflow,
  StabilizerNotContained,
  NotNormal,
  NotAnAutomorphism,
  NotReflexible,
  NotEdgeTransitive,
  LabelMismatch,
  RelationViolation,
  NonFaithfulAction,
  DegenerateSymbol,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry the 1-based position of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::Syntax, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace flagmap

#endif  // FLAGMAP_ERROR_HPP

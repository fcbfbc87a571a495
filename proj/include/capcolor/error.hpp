#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace capcolor {

enum class ErrorKind {
  InvalidEdge,
  DuplicateEdge,
  InvalidVertex,
  ParseError,
  CountMismatch,
  BudgetExceeded,
  TooLarge,
  PartialColoring,
  InvalidParameter,
  ClassViolation,
  SeparatorMismatch,
  NotInClass,
  TooLargeForStrict,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PartialColoring: return "PartialColoring";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ClassViolation: return "ClassViolation";
    case ErrorKind::SeparatorMismatch: return "SeparatorMismatch";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::TooLargeForStrict: return "TooLargeForStrict";
  }
  return "Unknown";
}

// Every failure raised by the library. `line()` is nonzero only for
// errors tied to a position in a parsed input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace capcolor

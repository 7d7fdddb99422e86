#pragma once

#include <stdexcept>
#include <string>

namespace semiconj {

/// Typed failure categories raised by the engine. "Absent" results are never
/// errors; they are returned as empty optionals.
enum class ErrorKind {
  BudgetExceeded,
  DegreeMismatch,
  FieldObstruction,
  NotEqualComposite,
  InvalidParameters,
  NotInE,
  SpecialInput,
  ConsistencyFailure,
  NotAnIterateSplit,
  BoundViolation,
  MalformedCurve,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FieldObstruction: return "FieldObstruction";
    case ErrorKind::NotEqualComposite: return "NotEqualComposite";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::NotInE: return "NotInE";
    case ErrorKind::SpecialInput: return "SpecialInput";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::NotAnIterateSplit: return "NotAnIterateSplit";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::MalformedCurve: return "MalformedCurve";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace semiconj

#ifndef TORICQ_ERRORS_HPP
#define TORICQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toricq {

enum class ErrorKind {
  Parse,
  Io,
  FieldMismatch,
  DivisionByZero,
  Empty,
  Unbounded,
  NonSimple,
  RedundantFacet,
  NotSurjective,
  NonGeneric,
  OutsideDelta,
  IndexBoundViolation,
  EulerMismatch,
  NegativeEntry,
  InvalidArgument,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Empty: return "empty";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::NonSimple: return "non-simple";
    case ErrorKind::RedundantFacet: return "redundant-facet";
    case ErrorKind::NotSurjective: return "not-surjective";
    case ErrorKind::NonGeneric: return "non-generic";
    case ErrorKind::OutsideDelta: return "outside-delta";
    case ErrorKind::IndexBoundViolation: return "index-bound-violation";
    case ErrorKind::EulerMismatch: return "euler-mismatch";
    case ErrorKind::NegativeEntry: return "negative-entry";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace toricq

#endif

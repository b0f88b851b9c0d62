#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reflekt {

enum class ErrorKind {
  CycleDetected,
  UnknownLabel,
  DuplicateLabel,
  NotMonotone,
  NotT0,
  InvalidTopology,
  EmptyMember,
  SignatureMismatch,
  KindMismatch,
  CapExceeded,
  BadPoint,
  SpaceMismatch,
  NotClosed,
  EmptySet,
  NoneKnown,
  NotDirected,
  Unresolved,
  TargetNotSober,
  NoUniquePoint,
  TargetNotDcpo,
  HypothesisFailed,
  UnknownLaw,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library; `kind()` names the
/// failure class, `what()` carries a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace reflekt

#include "reflekt/error.hpp"

namespace reflekt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotT0: return "NotT0";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::EmptyMember: return "EmptyMember";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadPoint: return "BadPoint";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NoneKnown: return "NoneKnown";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::Unresolved: return "Unresolved";
    case ErrorKind::TargetNotSober: return "TargetNotSober";
    case ErrorKind::NoUniquePoint: return "NoUniquePoint";
    case ErrorKind::TargetNotDcpo: return "TargetNotDcpo";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace reflekt

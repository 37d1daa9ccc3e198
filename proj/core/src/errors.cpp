#include "gphi/errors.hpp"

namespace gphi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case ErrorKind::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorKind::NoIrreducibleAction: return "NoIrreducibleAction";
    case ErrorKind::LatticeBudgetExceeded: return "LatticeBudgetExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::PrimeDoesNotDivide: return "PrimeDoesNotDivide";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::NotSchmidt: return "NotSchmidt";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

GroupError::GroupError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace gphi

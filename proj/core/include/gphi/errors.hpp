#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gphi {

enum class ErrorKind {
  Malformed,
  NotClosed,
  NoIdentity,
  NotAssociative,
  NoInverse,
  InvalidParameter,
  SizeBudgetExceeded,
  ActionNotAutomorphism,
  ActionNotHomomorphism,
  NoIrreducibleAction,
  LatticeBudgetExceeded,
  NotNormal,
  PrimeDoesNotDivide,
  NotPrimePower,
  NotSchmidt,
  NotApplicable,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and suitable
/// for dispatch; `what()` carries the human-readable detail, prefixed with
/// the kind name.
class GroupError : public std::runtime_error {
 public:
  GroupError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gphi

#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

// Error taxonomy. The CLI maps kinds onto exit codes:
//   MathNegative -> 1, Precondition -> 2, Budget -> 3, Input -> 4.
enum class ErrorKind {
  Input,              // malformed document, unresolved reference, invariant failure on load
  NotFiniteDimensional,
  NotTriangular,      // requested split admits a path from the R-side into the S-side
  FieldNotFinite,
  IsoUndecided,
  DecompositionBudgetExceeded,
  EnumerationBudgetExceeded,
  ClosureBudgetExceeded,
  IterationCapExceeded,
  PreconditionYExact,
  NotCompatible,
  NoSpecialPrecover,
  NoSpecialPreenvelope,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::NoSpecialPrecover:
      case ErrorKind::NoSpecialPreenvelope:
      case ErrorKind::NotTriangular:
        return 1;
      case ErrorKind::PreconditionYExact:
      case ErrorKind::NotCompatible:
      case ErrorKind::FieldNotFinite:
        return 2;
      case ErrorKind::IsoUndecided:
      case ErrorKind::DecompositionBudgetExceeded:
      case ErrorKind::EnumerationBudgetExceeded:
      case ErrorKind::ClosureBudgetExceeded:
      case ErrorKind::IterationCapExceeded:
        return 3;
      case ErrorKind::Input:
      case ErrorKind::NotFiniteDimensional:
        return 4;
      case ErrorKind::Internal:
        return 5;
    }
    return 5;
  }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

// Internal consistency assertion; failures indicate bugs, not bad input.
inline void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::Internal, "internal check failed: " + msg);
}

}  // namespace qhom

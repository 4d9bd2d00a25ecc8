#pragma once

#include <stdexcept>
#include <string>

namespace charasym {

// Every failure raised by the library derives from Error; the CLI maps these
// to exit status 1 and usage problems to exit status 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

#define CHARASYM_ERROR(Name, tag)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(what) {}         \
    const char* kind() const noexcept override { return tag; }      \
  };

CHARASYM_ERROR(ArgumentError, "argument")
CHARASYM_ERROR(DomainError, "domain")
CHARASYM_ERROR(SingularSpecializationError, "singular-specialization")
CHARASYM_ERROR(DegeneracyError, "degeneracy")
CHARASYM_ERROR(PoleError, "pole")
CHARASYM_ERROR(PreconditionError, "precondition")
CHARASYM_ERROR(QuadratureError, "quadrature")
CHARASYM_ERROR(BranchError, "branch")
CHARASYM_ERROR(ConvergenceError, "convergence")
CHARASYM_ERROR(PrecisionError, "precision")
CHARASYM_ERROR(CapacityError, "capacity")
CHARASYM_ERROR(IdentityViolation, "identity-violation")
CHARASYM_ERROR(TruncationError, "truncation")
CHARASYM_ERROR(InvariantViolation, "invariant")

#undef CHARASYM_ERROR

}  // namespace charasym

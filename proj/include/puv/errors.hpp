#pragma once

#include <stdexcept>
#include <string>

namespace puv {

// A violated mathematical precondition (as opposed to malformed input).
// The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateDeltaError : DomainError {
  DuplicateDeltaError()
      : DomainError(
            "duplicate entries in delta: the direct formula has a pole there; "
            "use the bezout method") {}
};

struct NotCoprimeError : DomainError {
  NotCoprimeError()
      : DomainError("polynomials share a nonconstant factor, no Bezout identity with "
                    "constant gcd exists") {}
};

}  // namespace puv

#pragma once

#include <stdexcept>
#include <string>

namespace fibrerank {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-visible precondition was violated (bad argument, curve not in the
// operation's domain, ...). CLI maps these to exit code 1.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The input equation defines a singular cubic, not an elliptic curve.
class SingularCurveError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Requested fibre of a family sits over the singular locus.
class SingularFibreError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An internal consistency check failed. Either a bug, or a computed value
// contradicts an imported statement; CLI maps these to exit code 2 so the
// condition is machine-detectable.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace fibrerank

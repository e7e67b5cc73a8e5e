#pragma once

#include <stdexcept>
#include <string>

namespace weylspectra {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a structural precondition (dimension mismatch, degenerate
/// Gram matrix, zero vector, non-self-adjoint endomorphism, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

/// Data failed symmetry or consistency validation.
struct ValidationError : Error {
  using Error::Error;
};

/// The underlying eigenvalue solver did not converge.
struct EigenSolverError : Error {
  using Error::Error;
};

/// Malformed expression, family specification or tensor file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace weylspectra

#pragma once

#include <stdexcept>
#include <string>

namespace tga {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (scalar grammar, descriptors).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands from different modes or ambients were combined.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A cocycle on a finite quotient (Z/q)^d would wrap around: the order of the
/// half-power root does not divide q.
class WellDefinednessError : public Error {
 public:
  using Error::Error;
};

/// A matrix does not preserve the cocycle it is supposed to act on.
class InvarianceViolation : public Error {
 public:
  using Error::Error;
};

/// The computation is not supported for this input (e.g. non-torsion values).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity that construction relies on fails.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

/// No rank-one spectral projection of the averaged operator exists.
class NoRankOneInvariant : public Error {
 public:
  using Error::Error;
};

/// The selected vector is not a common eigenvector within tolerance.
class NotEigenvector : public Error {
 public:
  using Error::Error;
};

}  // namespace tga

#pragma once

#include <stdexcept>
#include <string>

namespace eqconic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unparseable cycle/sigma/conic text,
/// degree mismatches, maps that are not group actions or homomorphisms.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The computation left the exact desk-scale setting this library supports.
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// A root of the determinant cubic is not rational.
class IrrationalNodalParameter : public ScopeError {
 public:
  using ScopeError::ScopeError;
};

/// Two different quadratic extensions of Q met in one computation.
class FieldMismatch : public ScopeError {
 public:
  using ScopeError::ScopeError;
};

/// det(mu*A + lambda*B) vanishes identically: every member of the pencil is singular.
class DegeneratePencil : public Error {
 public:
  using Error::Error;
};

/// A mark vector that is not the mark vector of any Burnside ring element.
class NonIntegralMarks : public Error {
 public:
  using Error::Error;
};

}  // namespace eqconic

#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by an exact zero scalar, or construction of a fraction with a
/// zero denominator.
class DivisionByZeroError : public Error {
public:
  using Error::Error;
};

/// A series operation asked for more coefficients than the operand carries.
class InsufficientOrderError : public Error {
public:
  using Error::Error;
};

/// Malformed scalar text or a malformed serialized document.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A hypergeometric parameter vector violates a legality requirement, or a
/// numeric argument is outside its domain (e.g. a zero decimation index or a
/// non-positive contour radius).
class IllegalParameterError : public Error {
public:
  using Error::Error;
};

/// An operation required the balanced shape |upper| = |lower| + 1 and the
/// input did not have it.
class UnbalancedError : public Error {
public:
  using Error::Error;
};

/// An operation is only defined for monomial exponent 0 or 1.
class BadExponentError : public Error {
public:
  using Error::Error;
};

/// Two vectors that must have equal length did not.
class LengthMismatchError : public Error {
public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.  This is
/// never a data error: it means one of the routes is wrong.
class OracleMismatchError : public Error {
public:
  using Error::Error;
};

}  // namespace hecke

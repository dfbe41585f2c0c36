#pragma once

#include <stdexcept>
#include <string>

namespace hksym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, malformed scalar literal.
class InvalidScalar : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
public:
  using Error::Error;
};

/// Malformed input file (JSON shape, dimensions, coefficients).
class FormatError : public Error {
public:
  using Error::Error;
};

/// The quartic does not satisfy S_{e,f} . S = 0 and so defines no
/// hyper-Kaehler symmetric space.
class NotHyperKahler : public Error {
public:
  using Error::Error;
};

/// The quartic is not fixed by the real structure: no real form exists for
/// the given quaternionic structure.
class NotReal : public Error {
public:
  using Error::Error;
};

/// An identity that holds for every valid input failed. Signals a bug or a
/// bypassed precondition, never a data state.
class TheoremViolation : public Error {
public:
  using Error::Error;
};

}  // namespace hksym

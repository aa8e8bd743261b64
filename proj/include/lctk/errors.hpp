#pragma once

#include <stdexcept>
#include <string>

namespace lctk {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  ZeroPolynomialError() : Error("operation is undefined for the zero polynomial") {}
};

class VariableMismatchError : public Error {
 public:
  using Error::Error;
};

class NotQuasiHomogeneousError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was violated by its arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace lctk

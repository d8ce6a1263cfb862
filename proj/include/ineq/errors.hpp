#pragma once

#include <stdexcept>
#include <string>

namespace ineq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample with no positive mass (all zeros, or no values at all).
class DegenerateSample : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroShare : public Error {
 public:
  using Error::Error;
};

/// Zero income where the measure takes a logarithm or a non-positive power.
class ZeroIncomeError : public Error {
 public:
  using Error::Error;
};

class CalibrationDomainError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// Input file does not carry the columns the schema declares.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Two tables that must cover the same countries do not.
class JoinError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace ineq

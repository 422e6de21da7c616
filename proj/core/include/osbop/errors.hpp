#pragma once

#include <stdexcept>

namespace osbop {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: bucket-order notation, matrix CSV, PrefLib files.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A domain invariant does not hold (bad partition, bad matrix, bad weights).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An exact search would evaluate more candidates than the configured budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

}  // namespace osbop

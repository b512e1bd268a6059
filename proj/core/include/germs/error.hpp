#pragma once

#include <stdexcept>
#include <string>

namespace germs {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An arithmetic operation left its domain: division by zero, reciprocal of a
/// non-unit, substitution of a series that is not in the maximal ideal.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The working truncation (or blow-up depth) is too small to decide the answer.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (non-nilpotent input to exp,
/// direction not invariant under a lift, level out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace germs

#pragma once

#include <stdexcept>
#include <string>

namespace qwi {

/// Base class for every error raised by the solver library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A profile or unit system failed validation (non-positive width, bad mass).
class InvalidProfile : public Error {
 public:
  using Error::Error;
};

/// The impedance ratio has a vanishing denominator: a legitimate pole of Z,
/// e.g. a node of the wave function at the evaluation plane.
class DegenerateState : public Error {
 public:
  using Error::Error;
};

/// The analytical sign-sum was asked for more regions than it enumerates.
class ProfileTooLarge : public Error {
 public:
  using Error::Error;
};

/// Transmission is undefined because a lead does not carry a propagating wave.
class EvanescentLead : public Error {
 public:
  using Error::Error;
};

/// Bound-state condition evaluated at an energy where a lead propagates.
class PropagatingLead : public Error {
 public:
  using Error::Error;
};

}  // namespace qwi

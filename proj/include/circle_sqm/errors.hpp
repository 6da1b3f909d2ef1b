#pragma once

#include <stdexcept>
#include <string>

namespace circle_sqm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma argument at a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Non-finite input, or an argument outside the admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Terminating series whose lower parameter hits a forbidden non-positive integer.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

/// Potential evaluated at one of its poles.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// Sign choice of the singular term not admissible for the given k1.
class BranchError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be real came out with a non-negligible imaginary part.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace circle_sqm

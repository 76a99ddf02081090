#pragma once

#include <stdexcept>
#include <string>

namespace besselgeo {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain (for example nu <= n - 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A series hit max_terms before its stopping criterion was met.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The denominator of a quotient is indistinguishable from zero.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

class ScanExhausted : public Error {
 public:
  using Error::Error;
};

/// Root bracket endpoints carry the same sign.
class BracketFailure : public Error {
 public:
  using Error::Error;
};

class IllConditioned : public Error {
 public:
  using Error::Error;
};

}  // namespace besselgeo

#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A monomial or window was requested outside its valid exponent range.
class InvalidWindow : public Error {
 public:
  using Error::Error;
};

// Inversion of a series (or a binomial factor) with zero leading coefficient.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested at or above the series' truncation order.
class OutOfWindow : public Error {
 public:
  using Error::Error;
};

// A term-generated sum never dropped below the truncation order. Signals a
// formally divergent series.
class TruncationStall : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class MissingParameter : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

class DisallowedSpecialization : public Error {
 public:
  using Error::Error;
};

}  // namespace qlab

#pragma once

#include <stdexcept>
#include <string>

#include "mbar/exact.hpp"

namespace mbar {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// A computed class or table broke a structural property it must have.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class TruncationCheckFailed : public Error {
 public:
  using Error::Error;
};

class NoConventionMatches : public Error {
 public:
  using Error::Error;
};

class AmbiguousConvention : public Error {
 public:
  using Error::Error;
};

class CacheError : public Error {
 public:
  using Error::Error;
};

// Betti-number evaluation produced a value that cannot be a rank.
class BadBettiValue : public Error {
 public:
  BadBettiValue(const std::string& what, int n, int l, BigRational value)
      : Error(what), n_(n), l_(l), value_(std::move(value)) {}

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  const BigRational& value() const noexcept { return value_; }

 private:
  int n_;
  int l_;
  BigRational value_;
};

class NonIntegralResult : public BadBettiValue {
 public:
  using BadBettiValue::BadBettiValue;
};

class NegativeResult : public BadBettiValue {
 public:
  using BadBettiValue::BadBettiValue;
};

}  // namespace mbar

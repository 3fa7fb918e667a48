#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sporadic/integer.hpp"

namespace sporadic {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Term-count cap or exponent bound exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name) : Error("unknown name: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Violated precondition on an argument (negative index, singular map, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A recurrence step whose numerator is not divisible by (n+1)^2 or (n+1)^3.
class NonIntegral : public Error {
 public:
  NonIntegral(long n, Integer numerator, Integer divisor)
      : Error("non-integral step at n=" + std::to_string(n) + ": " + numerator.get_str() + " / " +
              divisor.get_str()),
        n_(n),
        numerator_(std::move(numerator)),
        divisor_(std::move(divisor)) {}

  long n() const { return n_; }
  const Integer& numerator() const { return numerator_; }
  const Integer& divisor() const { return divisor_; }

 private:
  long n_;
  Integer numerator_;
  Integer divisor_;
};

}  // namespace sporadic

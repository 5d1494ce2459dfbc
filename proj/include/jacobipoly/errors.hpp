#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacobipoly {

// Root of every error raised by the library. The CLI maps these to exit code 2
// unless a subclass says otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpecMismatch : public Error {
 public:
  SpecMismatch(const std::string& lhs, const std::string& rhs)
      : Error("ring mismatch: " + lhs + " vs " + rhs) {}
};

class VarListMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class CoefficientNotInRing : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(unsigned long long p) : Error(std::to_string(p) + " is not prime") {}
};

class NotInS2 : public Error {
 public:
  using Error::Error;
};

class WrongArity : public Error {
 public:
  using Error::Error;
};

// A family parameter tuple breaks its defining equation.
class ConditionViolated : public Error {
 public:
  using Error::Error;
};

class CharMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace jacobipoly

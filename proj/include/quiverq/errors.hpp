#pragma once

#include <stdexcept>
#include <string>

namespace quiverq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidCartan : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class PrimeUnavailable : public Error {
 public:
  using Error::Error;
};

class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace quiverq

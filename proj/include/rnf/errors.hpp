#pragma once

#include <stdexcept>
#include <string>

namespace rnf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two jets of different truncation order were combined.
class OrderMismatch : public Error {
 public:
  OrderMismatch(int lhs, int rhs)
      : Error("jet order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rnf

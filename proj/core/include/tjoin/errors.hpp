#pragma once

#include <stdexcept>
#include <string>

namespace tjoin {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input or a structure violating a type invariant.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured vertex/edge cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tjoin

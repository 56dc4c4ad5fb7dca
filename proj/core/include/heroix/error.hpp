#pragma once

#include <stdexcept>
#include <string>

namespace heroix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad edge lists, out-of-range vertices, malformed files.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was exceeded before any work was done.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node budget. The question is left open; callers
/// must never read this as a negative answer.
class Undecided : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input outside its documented domain.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class ConsistencyFault : public Error {
 public:
  using Error::Error;
};

}  // namespace heroix

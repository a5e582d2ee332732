#pragma once

#include <stdexcept>
#include <string>

namespace invkit {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input: violated precondition, malformed document, unknown name.
/// The CLI maps this to exit status 1.
struct ValidationError : Error {
  using Error::Error;
};

/// A broken internal invariant (e.g. an exact cancellation that must hold
/// failed to hold). The CLI maps this to exit status 2.
struct InternalError : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace invkit

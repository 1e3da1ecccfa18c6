#pragma once

#include <stdexcept>
#include <string>

namespace talpha {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (files, parameters, weight functions).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exact routine was asked to run past its size guard.
class TooLarge : public Error {
 public:
  TooLarge(const std::string& what, int n, int guard)
      : Error(what + ": n=" + std::to_string(n) + " exceeds guard " + std::to_string(guard)),
        n_(n), guard_(guard) {}
  int n() const { return n_; }
  int guard() const { return guard_; }

 private:
  int n_;
  int guard_;
};

/// A structure the code constructed failed its own re-verification.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace talpha

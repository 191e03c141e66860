#pragma once

#include <stdexcept>
#include <string>

namespace colhur {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation, coloring, neck mess, or mismatched sizes.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale enumeration limit would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. The message carries the witness.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace colhur

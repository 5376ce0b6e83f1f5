#pragma once

#include <stdexcept>
#include <string>

namespace infothermo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or materialization would exceed a configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (non-uniform input, n = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Interval comparison could not separate two values within the precision cap.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// A model was asked about an atom it does not know.
class UnknownAtom : public Error {
 public:
  using Error::Error;
};

}  // namespace infothermo

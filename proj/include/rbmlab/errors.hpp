#pragma once

#include <stdexcept>
#include <string>

namespace rbmlab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: shapes, values, files, configuration. CLI exit code 2.
struct InputError : Error {
  using Error::Error;
};

struct DimensionError : InputError {
  using InputError::InputError;
};

struct DomainError : InputError {
  using InputError::InputError;
};

// File did not parse under the declared format.
struct FormatError : InputError {
  using InputError::InputError;
};

// Problem size exceeds what an exact routine can enumerate.
struct CapacityError : InputError {
  using InputError::InputError;
};

// Runtime failures: missing state, degenerate numerics, I/O. CLI exit code 3.
struct StateError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

struct GenerationError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace rbmlab

#pragma once

#include <stdexcept>
#include <string>

namespace algtheta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well formed but the mathematics rejects it
/// (non-algebraic theta divisor, non-Gorenstein singularity, ...).
class RejectedCurve : public Error {
 public:
  using Error::Error;
};

/// The input could not be parsed or violates the file schema.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace algtheta

#pragma once

#include <stdexcept>

namespace spinpaint {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or truncated PGM / .spin input, or a failed file operation.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Operands whose rows, cols or transform kind disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// FFT spectrum that does not invert to a real image, or an FFT pattern that
// is not closed under the conjugate mirror.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

// The low-passed mask never became strictly positive within the pass cap.
class SupportError : public Error {
 public:
  using Error::Error;
};

// Loss blocks could not be placed without overlap within the retry budget.
class PlacementError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinpaint

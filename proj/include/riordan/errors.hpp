#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

/// Failure of an exact computation (as opposed to malformed input).
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A leading principal Hankel minor vanished where a division needed it.
class HankelMinorError : public ComputeError {
 public:
  explicit HankelMinorError(int index)
      : ComputeError("Hankel minor h_" + std::to_string(index) + " vanishes"), index(index) {}
  int index;
};

/// A continued fraction was evaluated with fewer levels than requested coefficients need.
class InsufficientDepthError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

}  // namespace riordan

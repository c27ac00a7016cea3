#pragma once

#include <stdexcept>
#include <string>

namespace qcopy {

/// Base class for all recoverable failures raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimMismatch : public Error {
 public:
  explicit DimMismatch(const std::string& what) : Error(what) {}
};

/// Raised when an operator that must be Hermitian is not; carries the
/// relative residual ‖a − a†‖_F / ‖a‖_F that tripped the check.
class NotHermitian : public Error {
 public:
  NotHermitian(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotUnitary : public Error {
 public:
  NotUnitary(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(const std::string& what) : Error(what) {}
};

class NotPowerOfTwoDim : public Error {
 public:
  explicit NotPowerOfTwoDim(const std::string& what) : Error(what) {}
};

/// Malformed textual input (JSON, bitstrings, CLI payloads).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace qcopy

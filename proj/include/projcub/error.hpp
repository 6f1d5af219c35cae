#pragma once

#include <stdexcept>
#include <string>

namespace projcub {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Eigensolver non-convergence or a nonpositive quadrature weight.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

class NodeBudgetExceeded : public Error {
 public:
  NodeBudgetExceeded(std::size_t requested, std::size_t cap)
      : Error("node budget exceeded: " + std::to_string(requested) + " > cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// A constructed formula failed its post-construction identity probe.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed formula document or data file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace projcub

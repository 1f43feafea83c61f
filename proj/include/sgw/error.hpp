#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgw {

enum class ErrorCode {
  InvalidDomain,
  EmptyGrid,
  UnsupportedShape,
  WrongDomainKind,
  NoConvergence,
  KTooLarge,
  UnsupportedOrder,
  RangeError,
  TooFewEigenvalues,
  TooFewEigenpairs,
  IndexOrder,
  NotUnitGradient,
  SizeMismatch,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the workbench.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Raised by iterative solvers; carries the last residual reached.
class NoConvergence : public Error {
public:
  NoConvergence(const std::string& what, int iterations, double final_residual)
      : Error(ErrorCode::NoConvergence, what), iterations_(iterations),
        final_residual_(final_residual) {}

  int iterations() const noexcept { return iterations_; }
  double final_residual() const noexcept { return final_residual_; }

private:
  int iterations_;
  double final_residual_;
};

}  // namespace sgw

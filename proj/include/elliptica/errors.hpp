#pragma once

#include <stdexcept>
#include <string>

namespace elliptica {

enum class ErrorKind {
  DivergentBase,
  NonConvergence,
  ZeroArgument,
  PoleProximity,
  DomainError,
  SurfaceViolation,
  Inconsistent,
  Degenerate,
  IllConditioned,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double residual = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        residual_(residual) {}

  ErrorKind kind() const noexcept { return kind_; }
  // relation residual for SurfaceViolation, condition estimate for IllConditioned
  double residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  double residual_;
};

}  // namespace elliptica

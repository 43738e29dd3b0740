#include "elliptica/errors.hpp"

namespace elliptica {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivergentBase: return "DivergentBase";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SurfaceViolation: return "SurfaceViolation";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::IllConditioned: return "IllConditioned";
  }
  return "Error";
}

}  // namespace elliptica

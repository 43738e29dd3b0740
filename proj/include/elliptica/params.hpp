#pragma once

#include <optional>

#include "elliptica/specfun.hpp"

namespace elliptica {

// s = -p^{1/2} and s* = -p*^{1/2} are stored directly so that every power of
// -p^{1/2} is an integer power of a stored number.
struct EllipticParams {
  cplx q{0.5, 0.0};
  cplx s{-0.5, 0.0};
  cplx s_star{-0.5, 0.0};
  std::optional<double> c;
  int n = 2;

  cplx p() const { return s * s; }
  cplx p_star() const { return s_star * s_star; }

  // same point with (p, s) -> (p*, s*)
  EllipticParams starred() const;

  void validate() const;

  // s = -sqrt(p) (principal), s* = s q^{-c} with q^{-c} = exp(-c log q)
  static EllipticParams from_q_p_c(cplx q, cplx p, double c, int n = 2);
};

}  // namespace elliptica

#include "elliptica/params.hpp"

#include <cmath>

#include "elliptica/errors.hpp"

namespace elliptica {

EllipticParams EllipticParams::starred() const {
  EllipticParams r = *this;
  r.s = s_star;
  return r;
}

void EllipticParams::validate() const {
  auto finite = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if (!finite(q) || !finite(s) || !finite(s_star)) throw Error(ErrorKind::DomainError, "non-finite parameter");
  if (n < 2) throw Error(ErrorKind::DomainError, "N must be >= 2");
  if (q == 0.0 || !(std::abs(q) < 1.0)) throw Error(ErrorKind::DomainError, "need 0 < |q| < 1");
  const double ap = std::abs(p()), aps = std::abs(p_star());
  if (!(ap > 0.0 && ap < 1.0)) throw Error(ErrorKind::DomainError, "need 0 < |p| < 1");
  if (!(aps > 0.0 && aps < 1.0)) throw Error(ErrorKind::DomainError, "need 0 < |p*| < 1");
  if (c) {
    double lhs = std::abs(s_star / s);
    double rhs = std::pow(std::abs(q), -*c);
    if (std::abs(lhs - rhs) > 1e-12 * rhs)
      throw Error(ErrorKind::DomainError, "|s*/s| != |q|^{-c}", std::abs(lhs - rhs) / rhs);
  }
}

EllipticParams EllipticParams::from_q_p_c(cplx q, cplx p, double c, int n) {
  EllipticParams r;
  r.q = q;
  r.s = -std::sqrt(p);
  r.s_star = r.s * std::exp(-c * std::log(q));
  r.c = c;
  r.n = n;
  r.validate();
  return r;
}

}  // namespace elliptica

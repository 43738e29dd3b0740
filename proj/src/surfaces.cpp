#include "elliptica/surfaces.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "elliptica/errors.hpp"

namespace elliptica {

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string str(const Rational& r) {
  std::ostringstream o;
  o << r.numerator();
  if (r.denominator() != 1) o << "/" << r.denominator();
  return o.str();
}

}  // namespace

double surface_residual(LabelPair lab, const EllipticParams& params, SurfaceSide side) {
  const int sg = side == SurfaceSide::T ? -1 : 1;
  cplx lhs = ipow(params.s, sg * lab.ell);
  cplx rhs = ipow(params.s_star, sg * lab.ell_prime) * ipow(params.q, params.n);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

SurfaceSpec surface_check(LabelPair lab, const EllipticParams& params, SurfaceSide side, double tol) {
  double res = surface_residual(lab, params, side);
  if (!(res <= tol)) {
    std::ostringstream o;
    o << "labels (" << lab.ell << "," << lab.ell_prime << ") " << (side == SurfaceSide::T ? "T" : "S")
      << "-side relation fails, residual " << res;
    throw Error(ErrorKind::SurfaceViolation, o.str(), res);
  }
  SurfaceSpec sp;
  sp.labels = lab;
  sp.n = params.n;
  sp.gamma = ipow(params.s, side == SurfaceSide::T ? -lab.ell : lab.ell);
  sp.params = params;
  sp.side = side;
  sp.residual = res;
  return sp;
}

Rational critical_c(int ell, int n) {
  if (ell == 0) throw Error(ErrorKind::Inconsistent, "l = l' = 0 admits no surface (1 = q^N)");
  return Rational(-n, ell);
}

namespace {

ExponentSolution finish(LabelPair lab, Rational c, int n, Rational a, std::string derivation) {
  if (a <= 0) throw Error(ErrorKind::Inconsistent, derivation + "; a <= 0 so |p| >= 1");
  if (a - c <= 0) throw Error(ErrorKind::Inconsistent, derivation + "; a - c <= 0 so |p*| >= 1");
  ExponentSolution sol;
  sol.labels = lab;
  sol.n = n;
  sol.c = c;
  sol.a = a;
  long long u = a.numerator(), v = a.denominator();
  long long g = std::gcd(v, 2 * u);
  sol.r = v / g;
  sol.s = 2 * u / g;
  // sigma^l = sigma*^{l'}, preferring s = -p^{1/2} with the principal root
  const bool l_odd = lab.ell % 2 != 0, lp_odd = lab.ell_prime % 2 != 0;
  if (lp_odd) {
    sol.sigma = -1;
    sol.sigma_star = l_odd ? -1 : 1;
  } else if (!l_odd) {
    sol.sigma = -1;
    sol.sigma_star = -1;
  } else {
    sol.sigma = 1;
    sol.sigma_star = -1;
  }
  std::ostringstream o;
  o << derivation << "; p = q^{2a} so p^" << sol.r << " = q^" << sol.s << "; s = " << (sol.sigma < 0 ? "-" : "+")
    << "q^" << str(a) << ", s* = " << (sol.sigma_star < 0 ? "-" : "+") << "q^" << str(a - c);
  sol.derivation = o.str();
  return sol;
}

}  // namespace

ExponentSolution solve_exponent(LabelPair lab, Rational c, int n) {
  if (n < 2) throw Error(ErrorKind::DomainError, "N must be >= 2");
  if (lab.ell == lab.ell_prime) {
    Rational cc = critical_c(lab.ell, n);
    throw Error(ErrorKind::Degenerate,
                "l = l' = " + std::to_string(lab.ell) + ": the relation fixes c = " + str(cc) +
                    " and leaves p free" + (c == cc ? "" : " (given c differs: no surface)"),
                to_double(cc));
  }
  Rational a = (c * lab.ell_prime + n) / Rational(lab.ell_prime - lab.ell);
  std::ostringstream o;
  o << "a(l' - l) = c l' + N: a(" << lab.ell_prime << " - " << lab.ell << ") = " << str(c) << "*"
    << lab.ell_prime << " + " << n << " => a = " << str(a);
  return finish(lab, c, n, a, o.str());
}

ExponentSolution solve_label_prime(int ell, Rational a, Rational c, int n) {
  if (n < 2) throw Error(ErrorKind::DomainError, "N must be >= 2");
  if (a == c) throw Error(ErrorKind::Inconsistent, "a = c leaves l' undetermined");
  Rational lp = (a * ell + n) / (a - c);
  if (lp.denominator() != 1)
    throw Error(ErrorKind::Inconsistent, "l' = (a l + N)/(a - c) = " + str(lp) + " is not an integer");
  LabelPair lab{ell, static_cast<int>(lp.numerator())};
  std::ostringstream o;
  o << "l' = (a l + N)/(a - c) = (" << str(a) << "*" << ell << " + " << n << ")/(" << str(a) << " - " << str(c)
    << ") = " << lab.ell_prime;
  return finish(lab, c, n, a, o.str());
}

cplx qpow(cplx q, double x) { return std::exp(x * std::log(q)); }

EllipticParams params_from_solution(cplx q, const ExponentSolution& sol) {
  EllipticParams r;
  r.q = q;
  r.s = double(sol.sigma) * qpow(q, to_double(sol.a));
  r.s_star = double(sol.sigma_star) * qpow(q, to_double(sol.a - sol.c));
  r.c = to_double(sol.c);
  r.n = sol.n;
  r.validate();
  return r;
}

EllipticParams params_for_exponent(cplx q, double a, LabelPair lab, int n, int sigma) {
  if (lab.ell_prime == 0) throw Error(ErrorKind::Inconsistent, "l' = 0: s* is not determined by the relation");
  if (sigma != 1 && sigma != -1) throw Error(ErrorKind::DomainError, "sigma must be +1 or -1");
  const int sl = (lab.ell % 2 != 0) ? sigma : 1;  // sigma^l
  int sigma_star;
  if (lab.ell_prime % 2 != 0) {
    sigma_star = sl;
  } else {
    if (sl != 1) throw Error(ErrorKind::Inconsistent, "sign constraint sigma^l = sigma*^{l'} has no solution");
    sigma_star = -1;
  }
  const double as = (a * lab.ell + n) / lab.ell_prime;
  EllipticParams r;
  r.q = q;
  r.s = double(sigma) * qpow(q, a);
  r.s_star = double(sigma_star) * qpow(q, as);
  r.c = a - as;
  r.n = n;
  r.validate();
  surface_check(lab, r, SurfaceSide::T, 1e-10);
  return r;
}

std::vector<SurfaceSpec> enumerate_surfaces(const EllipticParams& params, int range, double tol) {
  params.validate();
  std::vector<SurfaceSpec> out;
  for (SurfaceSide side : {SurfaceSide::T, SurfaceSide::S})
    for (int l = -range; l <= range; ++l)
      for (int lp = -range; lp <= range; ++lp) {
        LabelPair lab{l, lp};
        if (surface_residual(lab, params, side) <= tol) out.push_back(surface_check(lab, params, side, tol));
      }
  return out;
}

EllipticParams case_study_params(cplx q) {
  EllipticParams r;
  r.q = q;
  r.s = -qpow(q, 1.5);
  r.s_star = -qpow(q, 0.5);
  r.c = 1.0;
  r.n = 2;
  r.validate();
  return r;
}

}  // namespace elliptica

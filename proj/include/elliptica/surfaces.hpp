#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elliptica/exchange.hpp"
#include "elliptica/params.hpp"

namespace elliptica {

enum class SurfaceSide { T, S };

struct SurfaceSpec {
  LabelPair labels;
  int n = 2;
  cplx gamma;
  EllipticParams params;
  SurfaceSide side = SurfaceSide::T;
  double residual = 0.0;
};

// T: s^{-l} = s*^{-l'} q^N, gamma = s^{-l}.   S: the same with (l, l') -> (-l, -l'), gamma = s^{l}.
double surface_residual(LabelPair labels, const EllipticParams& params, SurfaceSide side);
// SurfaceViolation (carrying the residual) when the relation fails beyond tol; N from params.n
SurfaceSpec surface_check(LabelPair labels, const EllipticParams& params, SurfaceSide side = SurfaceSide::T,
                          double tol = 1e-10);

// p = q^{2a} with a (l' - l) = c l' + N.  s = sigma q^a, s* = sigma* q^{a-c}.
struct ExponentSolution {
  LabelPair labels;
  int n = 2;
  Rational c;
  Rational a;
  // p^r = q^s with coprime r > 0
  long long r = 1, s = 0;
  int sigma = -1, sigma_star = -1;
  std::string derivation;
};

// Inconsistent: no exponent exists.  Degenerate: l = l', where the relation
// fixes c = -N/l instead of a (Error::residual() carries that critical c).
ExponentSolution solve_exponent(LabelPair labels, Rational c, int n);
// l' from a given exponent: l' = (a l + N)/(a - c); Inconsistent unless integral
ExponentSolution solve_label_prime(int ell, Rational a, Rational c, int n);
Rational critical_c(int ell, int n);

// q^x = exp(x log q), principal log
cplx qpow(cplx q, double x);
// s = sigma q^a, s* = sigma* q^{a-c}; validated
EllipticParams params_from_solution(cplx q, const ExponentSolution& sol);

// real-exponent version for sweeps: s = sigma q^a, s* = sigma* q^{(a l + N)/l'},
// c = a - (a l + N)/l'; needs l' != 0
EllipticParams params_for_exponent(cplx q, double a, LabelPair labels, int n, int sigma = 1);

// T-side and S-side surfaces with |l|, |l'| <= label_range holding at params
std::vector<SurfaceSpec> enumerate_surfaces(const EllipticParams& params, int label_range, double tol = 1e-10);

// c = 1, p = q^3: s = -q^{3/2}, s* = -q^{1/2}
EllipticParams case_study_params(cplx q);

}  // namespace elliptica

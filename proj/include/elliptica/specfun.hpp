#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace elliptica {

using cplx = std::complex<double>;
using Rational = boost::rational<long long>;

inline constexpr double kPi = 3.14159265358979323846;

struct TruncationPolicy {
  double term_tol = 1e-16;
  int max_terms = 10000;
  int consecutive_hits = 3;
  double pole_tol = 1e-8;
  // series/product cross-check in jacobi_theta, relative to the largest series term
  double agreement_tol = 1e-8;

  void validate() const;
  // defaults with ELLIPTICA_MAX_TERMS applied when set
  static TruncationPolicy from_env();
};

struct ProductValue {
  cplx value;
  double min_factor;  // smallest |1 - x| met; small means near a zero of the product
};

ProductValue qpoch_tracked(cplx z, std::span<const cplx> bases, const TruncationPolicy& policy);

cplx qpoch(cplx z, std::span<const cplx> bases, const TruncationPolicy& policy = {});
cplx qpoch(cplx z, std::initializer_list<cplx> bases, const TruncationPolicy& policy = {});
// for products that end up in a denominator: PoleProximity when a factor is within pole_tol of 0
cplx qpoch_nonzero(cplx z, std::initializer_list<cplx> bases, const TruncationPolicy& policy = {});

cplx theta_p(cplx z, cplx p, const TruncationPolicy& policy = {});
cplx theta_p_nonzero(cplx z, cplx p, const TruncationPolicy& policy = {});

// xi(z; p, q^4); guards its own denominator
cplx xi(cplx z, cplx p, cplx q, const TruncationPolicy& policy = {});
// also guards the numerator, for use as a divisor
cplx xi_nonzero(cplx z, cplx p, cplx q, const TruncationPolicy& policy = {});

// exact repeated multiplication, so powers of the stored s stay branch-free
inline cplx ipow(cplx z, int k) {
  cplx r = 1.0, b = k < 0 ? 1.0 / z : z;
  for (unsigned e = static_cast<unsigned>(k < 0 ? -k : k); e; e >>= 1, b *= b)
    if (e & 1u) r *= b;
  return r;
}

// e^{i pi x}
inline cplx expipi(cplx x) { return std::exp(cplx(0.0, kPi) * x); }

struct RationalCharacteristic {
  Rational gamma1;
  Rational gamma2;
  int n = 2;

  // denominators must divide 2n (half-integer offsets plus j/n)
  void validate() const;
  static RationalCharacteristic standard(int j, int k, int n);  // (1/2 + j/n, 1/2 + k/n)
};

// Series form, no cross-check. Characteristics may be any real numbers here.
cplx jacobi_theta_series(double gamma1, double gamma2, cplx xi_arg, cplx tau,
                         const TruncationPolicy& policy = {});
cplx jacobi_theta_product(double gamma1, double gamma2, cplx xi_arg, cplx tau,
                          const TruncationPolicy& policy = {});
// series value, verified against the product form
cplx jacobi_theta(const RationalCharacteristic& ch, cplx xi_arg, cplx tau,
                  const TruncationPolicy& policy = {});

}  // namespace elliptica

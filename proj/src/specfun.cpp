#include "elliptica/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "elliptica/errors.hpp"

namespace elliptica {

void TruncationPolicy::validate() const {
  if (!(term_tol > 0.0)) throw Error(ErrorKind::DomainError, "term_tol must be positive");
  if (max_terms < 1) throw Error(ErrorKind::DomainError, "max_terms must be >= 1");
  if (consecutive_hits < 1) throw Error(ErrorKind::DomainError, "consecutive_hits must be >= 1");
  if (!(pole_tol > 0.0)) throw Error(ErrorKind::DomainError, "pole_tol must be positive");
}

TruncationPolicy TruncationPolicy::from_env() {
  TruncationPolicy p;
  if (const char* env = std::getenv("ELLIPTICA_MAX_TERMS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > std::numeric_limits<int>::max())
      throw Error(ErrorKind::DomainError, std::string("bad ELLIPTICA_MAX_TERMS: ") + env);
    p.max_terms = static_cast<int>(v);
  }
  return p;
}

namespace {

// Nested evaluation: the outermost base is peeled off and the rest is an
// ordinary product of lower multiplicity.  `tail_scale` bounds how much a
// nested product can deviate from 1 relative to its first argument.
cplx qpoch_rec(cplx z, std::span<const cplx> bases, const TruncationPolicy& pol, double& min_factor) {
  if (bases.empty()) {
    cplx f = 1.0 - z;
    min_factor = std::min(min_factor, std::abs(f));
    return f;
  }
  const cplx a = bases.back();
  auto rest = bases.first(bases.size() - 1);
  double tail_scale = 1.0;
  for (cplx b : rest) tail_scale /= (1.0 - std::abs(b));

  cplx acc = 1.0;
  cplx x = z;
  int hits = 0;
  for (int n = 0; n < pol.max_terms; ++n) {
    if (std::abs(x) * tail_scale < pol.term_tol) {
      if (++hits >= pol.consecutive_hits) return acc;
    } else {
      hits = 0;
      acc *= qpoch_rec(x, rest, pol, min_factor);
    }
    x *= a;
  }
  throw Error(ErrorKind::NonConvergence,
              "q-Pochhammer product not converged after " + std::to_string(pol.max_terms) + " factors");
}

}  // namespace

ProductValue qpoch_tracked(cplx z, std::span<const cplx> bases, const TruncationPolicy& policy) {
  policy.validate();
  for (cplx a : bases)
    if (!(std::abs(a) < 1.0)) throw Error(ErrorKind::DivergentBase, "base modulus >= 1");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorKind::DomainError, "non-finite argument");
  double mf = std::numeric_limits<double>::infinity();
  cplx v = qpoch_rec(z, bases, policy, mf);
  return {v, mf};
}

cplx qpoch(cplx z, std::span<const cplx> bases, const TruncationPolicy& policy) {
  return qpoch_tracked(z, bases, policy).value;
}

cplx qpoch(cplx z, std::initializer_list<cplx> bases, const TruncationPolicy& policy) {
  return qpoch_tracked(z, std::span<const cplx>(bases.begin(), bases.size()), policy).value;
}

cplx qpoch_nonzero(cplx z, std::initializer_list<cplx> bases, const TruncationPolicy& policy) {
  auto r = qpoch_tracked(z, std::span<const cplx>(bases.begin(), bases.size()), policy);
  if (r.min_factor < policy.pole_tol)
    throw Error(ErrorKind::PoleProximity, "denominator product vanishes near argument");
  return r.value;
}

cplx theta_p(cplx z, cplx p, const TruncationPolicy& policy) {
  if (z == 0.0) throw Error(ErrorKind::ZeroArgument, "Theta_p(0) is undefined");
  return qpoch(z, {p}, policy) * qpoch(p / z, {p}, policy) * qpoch(p, {p}, policy);
}

cplx theta_p_nonzero(cplx z, cplx p, const TruncationPolicy& policy) {
  if (z == 0.0) throw Error(ErrorKind::ZeroArgument, "Theta_p(0) is undefined");
  return qpoch_nonzero(z, {p}, policy) * qpoch_nonzero(p / z, {p}, policy) *
         qpoch(p, {p}, policy);
}

namespace {

cplx xi_impl(cplx z, cplx p, cplx q, const TruncationPolicy& pol, bool guard_num) {
  const cplx q2 = q * q, q4 = q2 * q2;
  auto num = [&](cplx x) {
    return guard_num ? qpoch_nonzero(x, {p, q4}, pol) : qpoch(x, {p, q4}, pol);
  };
  cplx n = num(q2 * z) * num(p * q2 * z);
  cplx d = qpoch_nonzero(q4 * z, {p, q4}, pol) * qpoch_nonzero(p * z, {p, q4}, pol);
  return n / d;
}

}  // namespace

cplx xi(cplx z, cplx p, cplx q, const TruncationPolicy& policy) {
  return xi_impl(z, p, q, policy, false);
}

cplx xi_nonzero(cplx z, cplx p, cplx q, const TruncationPolicy& policy) {
  return xi_impl(z, p, q, policy, true);
}

void RationalCharacteristic::validate() const {
  if (n < 1) throw Error(ErrorKind::DomainError, "characteristic needs N >= 1");
  if ((2 * n) % gamma1.denominator() != 0 || (2 * n) % gamma2.denominator() != 0)
    throw Error(ErrorKind::DomainError, "characteristic denominator does not divide 2N");
}

RationalCharacteristic RationalCharacteristic::standard(int j, int k, int n) {
  RationalCharacteristic c{Rational(1, 2) + Rational(j, n), Rational(1, 2) + Rational(k, n), n};
  c.validate();
  return c;
}

namespace {

void check_tau(cplx tau) {
  if (!(tau.imag() > 0.0)) throw Error(ErrorKind::DomainError, "Im(tau) must be positive");
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

struct SeriesResult {
  cplx value;
  double max_term;
};

SeriesResult theta_series(double g1, double g2, cplx xi_arg, cplx tau, const TruncationPolicy& pol) {
  check_tau(tau);
  auto term = [&](double m) {
    double u = m + g1;
    return expipi(u * u * tau + 2.0 * u * (xi_arg + g2));
  };
  cplx sum = term(0.0);
  double max_term = std::abs(sum);
  // Gaussian decay only sets in past the peak of |term|
  const double peak = std::abs(xi_arg.imag() / tau.imag()) + std::abs(g1) + 1.0;
  int hits = 0;
  for (int k = 1; k <= pol.max_terms; ++k) {
    cplx shell = term(k) + term(-k);
    sum += shell;
    max_term = std::max({max_term, std::abs(term(k)), std::abs(term(-k))});
    if (k > peak && std::abs(shell) <= pol.term_tol * max_term) {
      if (++hits >= pol.consecutive_hits) return {sum, max_term};
    } else {
      hits = 0;
    }
  }
  throw Error(ErrorKind::NonConvergence, "theta series not converged");
}

}  // namespace

cplx jacobi_theta_series(double gamma1, double gamma2, cplx xi_arg, cplx tau,
                         const TruncationPolicy& policy) {
  policy.validate();
  return theta_series(gamma1, gamma2, xi_arg, tau, policy).value;
}

cplx jacobi_theta_product(double g1, double g2, cplx xi_arg, cplx tau, const TruncationPolicy& policy) {
  check_tau(tau);
  const cplx p = expipi(2.0 * tau);
  cplx pref = expipi(2.0 * g1 * g2 + tau * g1 * g1 + 2.0 * g1 * xi_arg);
  cplx arg = -expipi(2.0 * g2 + 2.0 * tau * (g1 + 0.5) + 2.0 * xi_arg);
  return pref * theta_p(arg, p, policy);
}

cplx jacobi_theta(const RationalCharacteristic& ch, cplx xi_arg, cplx tau, const TruncationPolicy& policy) {
  ch.validate();
  policy.validate();
  const double g1 = to_double(ch.gamma1), g2 = to_double(ch.gamma2);
  auto s = theta_series(g1, g2, xi_arg, tau, policy);
  cplx prod = jacobi_theta_product(g1, g2, xi_arg, tau, policy);
  const double scale = std::max(s.max_term, std::abs(prod));
  if (std::abs(s.value - prod) > policy.agreement_tol * scale)
    throw Error(ErrorKind::NonConvergence, "theta series and product forms disagree");
  return s.value;
}

}  // namespace elliptica

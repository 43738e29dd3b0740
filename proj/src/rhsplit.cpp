#include "elliptica/rhsplit.hpp"

#include <algorithm>

#include "elliptica/errors.hpp"
#include "elliptica/surfaces.hpp"

namespace elliptica {

void SplitFactor::validate() const {
  if (n != params.n) throw Error(ErrorKind::DomainError, "SplitFactor N differs from params N");
  params.validate();
  surface_check(labels, params, SurfaceSide::T, 1e-10);
}

namespace {

cplx prefactor(cplx x2, int exponent, const TruncationPolicy& pol) {
  cplx base = 1.0 - x2;
  if (exponent > 0 && std::abs(base) < pol.pole_tol) throw Error(ErrorKind::PoleProximity, "x^2 = 1");
  return ipow(base, -exponent);
}

cplx phi_n2(cplx x, const SplitFactor& sp, const TruncationPolicy& pol) {
  const auto& pr = sp.params;
  const int L = std::abs(sp.labels.ell), Lp = std::abs(sp.labels.ell_prime);
  const cplx q2 = pr.q * pr.q, q4 = q2 * q2, x2 = x * x;
  auto num = [&](cplx a) { return qpoch(a, {q4}, pol); };
  auto den = [&](cplx a) { return qpoch_nonzero(a, {q4}, pol); };
  cplx r = prefactor(x2, L - Lp, pol);
  for (int j = 1; j < L; ++j) {
    cplx pj = ipow(pr.s, 2 * j), pmj = ipow(pr.s, -2 * j);
    r *= num(pj * x2) * num(q2 * pmj * x2) / (den(q4 * pmj * x2) * den(q2 * pj * x2));
  }
  for (int j = 1; j < Lp; ++j) {
    cplx pj = ipow(pr.s_star, 2 * j), pmj = ipow(pr.s_star, -2 * j);
    r *= num(q4 * pmj * x2) * num(q2 * pj * x2) / (den(pj * x2) * den(q2 * pmj * x2));
  }
  return r * r;
}

cplx phi_glN(cplx x, const SplitFactor& sp, const TruncationPolicy& pol) {
  const auto& pr = sp.params;
  const int N = pr.n, L = std::abs(sp.labels.ell), Lp = std::abs(sp.labels.ell_prime);
  const cplx q2 = pr.q * pr.q, b = ipow(pr.q, 2 * N), c = ipow(pr.q, 2 * N - 2), x2 = x * x;
  auto num = [&](cplx a) { return qpoch(a, {b}, pol); };
  auto den = [&](cplx a) { return qpoch_nonzero(a, {b}, pol); };
  cplx r = prefactor(x2, 2 * L - 2 * Lp, pol);
  for (int j = 1; j < L; ++j) {
    cplx pj = ipow(pr.s, 2 * j), pmj = ipow(pr.s, -2 * j);
    cplx t = num(pj * x2) / den(b * pmj * x2);
    r *= num(q2 * pmj * x2) * num(c * pmj * x2) / (den(q2 * pj * x2) * den(c * pj * x2)) * t * t;
  }
  for (int j = 1; j < Lp; ++j) {
    cplx pj = ipow(pr.s_star, 2 * j), pmj = ipow(pr.s_star, -2 * j);
    cplx t = num(b * pmj * x2) / den(pj * x2);
    r *= num(q2 * pj * x2) * num(c * pj * x2) / (den(q2 * pmj * x2) * den(c * pmj * x2)) * t * t;
  }
  return r;
}

}  // namespace

cplx phi(cplx x, const SplitFactor& spec, const TruncationPolicy& pol) {
  if (spec.n != spec.params.n) throw Error(ErrorKind::DomainError, "SplitFactor N differs from params N");
  return spec.n == 2 ? phi_n2(x, spec, pol) : phi_glN(x, spec, pol);
}

VerificationReport verify_split(const SplitFactor& spec, std::span<const cplx> zs, double tol,
                                const TruncationPolicy& pol) {
  spec.validate();
  const auto& L = spec.labels;
  VerificationReport rep("rhsplit[(" + std::to_string(L.ell) + "," + std::to_string(L.ell_prime) +
                             "),N=" + std::to_string(spec.n) + "]",
                         tol);
  auto r_of = [&](cplx z) { return big_F(L, L, z, spec.params, pol) * phi(1.0 / z, spec, pol) / phi(z, spec, pol); };
  double worst_pair = 0.0, worst_dev = -1.0;
  cplx worst_r = 1.0;
  for (cplx z : zs) {
    try {
      cplx r = r_of(z);
      double dev = std::abs(r - 1.0);
      rep.add(SamplePoint{{{"z", z}, {"r", r}}}, dev);
      if (dev > worst_dev) worst_dev = dev, worst_r = r;
      worst_pair = std::max(worst_pair, std::abs(r * r_of(1.0 / z) - 1.0));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleProximity) throw;
      rep.notes.push_back(std::string("skipped sample at a pole: ") + e.what());
    }
  }
  rep.extra["r_times_r_inverse_max_defect"] = worst_pair;
  rep.extra["worst_r"] = to_json(worst_r);
  rep.finalize();
  if (!rep.passed) rep.notes.push_back("systematic deviation of r(z) from 1; worst r recorded in extra.worst_r");
  return rep;
}

}  // namespace elliptica

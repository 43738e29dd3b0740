#include "elliptica/classical.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "elliptica/errors.hpp"
#include "elliptica/surfaces.hpp"

namespace elliptica {

cplx h_poisson(cplx x, cplx q, const TruncationPolicy& pol) {
  pol.validate();
  if (x == 0.0) throw Error(ErrorKind::ZeroArgument, "x = 0");
  if (!(std::abs(q) < 1.0) || q == 0.0) throw Error(ErrorKind::DomainError, "need 0 < |q| < 1");
  const cplx x2 = x * x, y2 = 1.0 / x2, q2 = q * q, q4 = q2 * q2;
  auto inv = [&](cplx u) {
    cplx d = 1.0 - u;
    if (std::abs(d) < pol.pole_tol) throw Error(ErrorKind::PoleProximity, "h has a pole here");
    return 1.0 / d;
  };
  cplx sum = 0.0;
  cplx a = 1.0;  // q^{4n}
  int hits = 0;
  for (int n = 0; n < pol.max_terms; ++n) {
    cplx b = a * q2;
    cplx shell = inv(b * x2) - inv(a * x2) + inv(a * y2) - inv(b * y2);
    sum += shell;
    if (n > 0 && std::abs(shell) <= pol.term_tol * std::max(1.0, std::abs(sum))) {
      if (++hits >= pol.consecutive_hits) {
        return 2.0 * std::log(q) * ((1.0 + x2) * inv(x2) + 2.0 * sum);
      }
    } else {
      hits = 0;
    }
    a *= q4;
  }
  throw Error(ErrorKind::NonConvergence, "h series not converged");
}

void LimitConfig::validate() const {
  if (eta() == 0) throw Error(ErrorKind::DomainError, "eta = (l - l')(l + l' - 1) vanishes");
  if (beta_sequence.size() != 3) throw Error(ErrorKind::DomainError, "Richardson step needs exactly three betas");
  for (size_t i = 0; i < beta_sequence.size(); ++i) {
    if (!(beta_sequence[i] > 0.0)) throw Error(ErrorKind::DomainError, "betas must be positive");
    if (i > 0 && !(beta_sequence[i] < beta_sequence[i - 1]))
      throw Error(ErrorKind::DomainError, "betas must decrease strictly");
  }
}

cplx limit_difference_quotient(const LimitConfig& cfg, int k, double beta, cplx z, cplx q, int n,
                               const TruncationPolicy& pol) {
  auto params = params_for_exponent(q, k - beta / cfg.eta(), cfg.labels, n);
  return (big_F(cfg.labels, cfg.labels, z, params, pol) - 1.0) / beta;
}

cplx richardson_limit(const LimitConfig& cfg, int k, cplx z, cplx q, int n, const TruncationPolicy& pol) {
  cfg.validate();
  Eigen::Matrix3cd A;
  Eigen::Vector3cd d;
  for (int i = 0; i < 3; ++i) {
    double b = cfg.beta_sequence[i];
    A(i, 0) = 1.0;
    A(i, 1) = b;
    A(i, 2) = b * b;
    d(i) = limit_difference_quotient(cfg, k, b, z, q, n, pol);
  }
  return A.partialPivLu().solve(d)(0);
}

namespace {
SamplePoint spt(std::initializer_list<std::pair<std::string, cplx>> v) { return SamplePoint{v}; }
}  // namespace

std::vector<VerificationReport> semiclassical_limit(const LimitConfig& cfg, std::span<const cplx> zs, cplx q, int n,
                                                    double tol, const TruncationPolicy& pol) {
  cfg.validate();
  const int k = cfg.k;
  std::ostringstream lab;
  lab << "(" << cfg.labels.ell << "," << cfg.labels.ell_prime << "),k=" << k;

  std::vector<cplx> d0, d1, d2;
  for (cplx z : zs) {
    d0.push_back(richardson_limit(cfg, k, z, q, n, pol));
    d1.push_back(richardson_limit(cfg, k + 1, z, q, n, pol));
    d2.push_back(richardson_limit(cfg, k + 2, z, q, n, pol));
  }

  // h(1/z) = -h(z), so the two orientations are +h(z) and h(1/z)
  VerificationReport lim("classical.limit_vs_h[" + lab.str() + "]", tol);
  int orientation = 0;
  bool consistent = true;
  for (size_t i = 0; i < zs.size(); ++i) {
    cplx h = h_poisson(zs[i], q, pol);
    int best = std::abs(d0[i] - h) <= std::abs(d0[i] + h) ? 1 : -1;
    if (i == 0) orientation = best;
    if (best != orientation) consistent = false;
    lim.add(spt({{"z", zs[i]}, {"D0", d0[i]}, {"h(z)", h}}), std::abs(d0[i] - double(orientation) * h));
  }
  lim.extra["orientation"] = orientation > 0 ? "D0 = h(z)" : "D0 = h(1/z) = -h(z)";
  lim.extra["orientation_consistent"] = consistent;
  lim.finalize();
  if (!consistent) {
    lim.passed = false;
    lim.notes.push_back("best orientation differs between sample points");
  }

  VerificationReport kin("classical.k_independence[" + lab.str() + "]", tol);
  kin.notes.push_back("|D0(k) - D0(k+1)|");
  for (size_t i = 0; i < zs.size(); ++i)
    kin.add(spt({{"z", zs[i]}, {"D0(k)", d0[i]}, {"D0(k+1)", d1[i]}}), std::abs(d0[i] - d1[i]));
  kin.finalize();
  if (!kin.passed && !zs.empty()) {
    std::ostringstream o;
    o << "D0(k+1)/D0(k) = " << format(d1[0] / d0[0]) << " at the first sample";
    kin.notes.push_back(o.str());
  }

  VerificationReport k2("classical.k_plus_2[" + lab.str() + "]", tol);
  k2.notes.push_back("|D0(k) - D0(k+2)|");
  for (size_t i = 0; i < zs.size(); ++i)
    k2.add(spt({{"z", zs[i]}, {"D0(k)", d0[i]}, {"D0(k+2)", d2[i]}}), std::abs(d0[i] - d2[i]));
  k2.finalize();

  // leading-order linearity: the finite-difference slopes of D(beta) over consecutive
  // decades agree up to O(beta_1)
  VerificationReport lin("classical.linear_in_beta[" + lab.str() + "]", 10.0 * cfg.beta_sequence[0]);
  for (cplx z : zs) {
    cplx D[3];
    for (int i = 0; i < 3; ++i) D[i] = limit_difference_quotient(cfg, k, cfg.beta_sequence[i], z, q, n, pol);
    const auto& b = cfg.beta_sequence;
    cplx a1 = (D[0] - D[1]) / (b[0] - b[1]), a2 = (D[1] - D[2]) / (b[1] - b[2]);
    lin.add(spt({{"z", z}, {"slope1", a1}, {"slope2", a2}}), std::abs(a1 - a2) / std::max(1.0, std::abs(a1)));
  }
  lin.finalize();

  VerificationReport deg("classical.beta0_degenerate[" + lab.str() + "]", tol);
  auto p0 = params_for_exponent(q, k, cfg.labels, n);
  if (std::abs(*p0.c - std::round(*p0.c)) > 1e-12) deg.notes.push_back("c is not an integer at beta = 0");
  deg.extra["c"] = *p0.c;
  for (cplx z : zs) {
    cplx f = big_F(cfg.labels, cfg.labels, z, p0, pol);
    deg.add(spt({{"z", z}, {"F", f}}), std::abs(f - 1.0));
  }
  deg.finalize();

  return {lim, kin, k2, lin, deg};
}

VerificationReport verify_critical_c_degeneration(int ell, cplx q, cplx s, std::span<const cplx> zs, double tol,
                                                const TruncationPolicy& pol) {
  if (ell == 0) throw Error(ErrorKind::DomainError, "l = 0 has no critical c");
  EllipticParams pr;
  pr.q = q;
  pr.s = s;
  pr.s_star = s * qpow(q, 2.0 / ell);
  pr.c = -2.0 / ell;
  pr.n = 2;
  pr.validate();
  VerificationReport rep("structure.critical_c_degeneration[l=" + std::to_string(ell) + "]", tol);
  rep.extra["c"] = -2.0 / ell;
  for (cplx z : zs) {
    cplx f = big_F_equal({ell, ell}, z, pr, pol);
    rep.add(spt({{"z", z}, {"F", f}}), std::abs(f - 1.0));
  }
  return rep.finalize();
}

}  // namespace elliptica

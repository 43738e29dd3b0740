#pragma once

#include <span>
#include <vector>

#include "elliptica/exchange.hpp"
#include "elliptica/report.hpp"

namespace elliptica {

cplx h_poisson(cplx x, cplx q, const TruncationPolicy& policy = {});

struct LimitConfig {
  LabelPair labels;
  int k = 1;
  std::vector<double> beta_sequence{1e-2, 1e-3, 1e-4};

  int eta() const { return (labels.ell - labels.ell_prime) * (labels.ell + labels.ell_prime - 1); }
  void validate() const;
};

// (F - 1)/beta at -p^{1/2} = q^{k - beta/eta}, s* and c taken from the surface
cplx limit_difference_quotient(const LimitConfig& cfg, int k, double beta, cplx z, cplx q, int n,
                               const TruncationPolicy& policy = {});
// Richardson: fit D0 + a beta + b beta^2 through the three betas
cplx richardson_limit(const LimitConfig& cfg, int k, cplx z, cplx q, int n, const TruncationPolicy& policy = {});

// limit against h with one orientation for all z, |D0(k) - D0(k+1)|, |D0(k) - D0(k+2)|,
// slope consistency across the beta decades, and F == 1 at beta = 0
std::vector<VerificationReport> semiclassical_limit(const LimitConfig& cfg, std::span<const cplx> zs, cplx q,
                                                    int n, double tol, const TruncationPolicy& policy = {});

// F^{ll}_{ll} == 1 for l = l', c = -2/l, s* = s q^{2/l}
VerificationReport verify_critical_c_degeneration(int ell, cplx q, cplx s, std::span<const cplx> zs, double tol,
                                                const TruncationPolicy& policy = {});

}  // namespace elliptica

#pragma once

#include <cstdint>
#include <vector>

#include "elliptica/matrix.hpp"
#include "elliptica/params.hpp"
#include "elliptica/report.hpp"

namespace elliptica {

// z = e^{i pi xi}, q = e^{i pi mu}, p = e^{2 i pi tau}; the shift z -> s z is
// xi -> xi + tau + 1, i.e. s = -e^{i pi tau}.
struct XiMuTauPoint {
  cplx xi, mu, tau;

  cplx z() const { return expipi(xi); }
  cplx q() const { return expipi(mu); }
  cplx p() const { return expipi(2.0 * tau); }
  cplx s() const { return -expipi(tau); }

  void validate(int n) const;
  // s* = s (no central-charge shift); n sets N
  EllipticParams params(int n) const;
};

struct ZnIndex {
  int alpha1 = 0, alpha2 = 0;
};

// Character: diag(omega^{j(N+1)/2}) for odd N, principal root for even N.
// Principal: diag(e^{i pi j / N}) for every N.
enum class SqrtGRoot { Character, Principal };

struct GhMatrices {
  int n;
  ComplexMatrix g, h, g_half;
  std::vector<ComplexMatrix> I;  // I[alpha1 * n + alpha2]

  const ComplexMatrix& at(ZnIndex a) const { return I[a.alpha1 * n + a.alpha2]; }
  // g^{1/2} h g^{1/2}
  ComplexMatrix shift_matrix() const { return g_half * h * g_half; }
};

GhMatrices gh_matrices(int n, SqrtGRoot root = SqrtGRoot::Character);

ComplexMatrix belavin_w(const XiMuTauPoint& pt, int n, const TruncationPolicy& policy = {},
                        SqrtGRoot root = SqrtGRoot::Character);

// tau_N with its argument given through the xi exponent (x = e^{i pi xi_arg})
cplx tau_N(cplx xi_arg, cplx mu, int n, const TruncationPolicy& policy = {});
// q^{2/N-2} taken as exp((2/N - 2) log q), principal log
cplx tau_tilde_N(cplx z, cplx q, int n, const TruncationPolicy& policy = {});

ComplexMatrix r_matrix_N(const XiMuTauPoint& pt, int n, const TruncationPolicy& policy = {},
                         SqrtGRoot root = SqrtGRoot::Character);

// Z_N symmetry, support pattern, tau_N inversion, crossing-unitarity,
// quasi-periodicity, shift accumulation (l in [-2, 2]) and YBE (informational).
// Sample points: xi drawn around base.xi, mu and tau fixed.
std::vector<VerificationReport> verify_glN(const XiMuTauPoint& base, int n, int n_samples, std::uint64_t seed,
                                           double tol, const TruncationPolicy& policy = {},
                                           SqrtGRoot root = SqrtGRoot::Character);

// N = 2 Belavin matrix against the eight-vertex W at s = -e^{i pi tau}:
// nonzero-entry ratios must be constant; the common ratio lands in `extra`.
VerificationReport check_n2_proportionality(const XiMuTauPoint& base, int n_samples, std::uint64_t seed,
                                            double tol, const TruncationPolicy& policy = {});

}  // namespace elliptica

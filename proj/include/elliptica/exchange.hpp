#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "elliptica/params.hpp"
#include "elliptica/report.hpp"

namespace elliptica {

struct LabelPair {
  int ell = 0;
  int ell_prime = 0;
};

// l >= 0: prod_{j=1..l} tau~_N(s^{-j} z);  l < 0: 1 / F(-l, s^{-l} z).
// starred swaps s -> s*.  N is params.n (one code path for every N).
cplx F_func(int ell, cplx z, const EllipticParams& params, bool starred, const TruncationPolicy& policy = {});

// F*(l', z) / F(l, z); the T-side surface for labels must hold
cplx f_exchange(LabelPair labels, cplx z, const EllipticParams& params, const TruncationPolicy& policy = {});

// structure function with gamma = s^{-lambda}; both surfaces must hold
cplx big_F(LabelPair labels, LabelPair labels2, cplx z, const EllipticParams& params,
           const TruncationPolicy& policy = {});

// equal-label form through the inversion formula (N = 2)
cplx big_F_equal(LabelPair labels, cplx z, const EllipticParams& params, const TruncationPolicy& policy = {});

// c = 1, p = q^3 case study: congruence classes mod 4 with l' = 3l + 4
struct TableauClass {
  int ell_bar, ell_prime_bar;
  LabelPair representative;
};
const std::array<TableauClass, 4>& tableau_classes();

// closed form of the c = 1, p = q^3 table, row/column class index 1..3 (class (l, 3l mod 4)),
// with Theta = Theta_{q^4}
cplx tableau_value(int row, int col, cplx z, cplx q, const TruncationPolicy& policy = {});

// the 9 tableau entries, the (0,0) row/column, congruency (1,7) == (5,19) == (-3,-5),
// compatibility on all representative pairs
std::vector<VerificationReport> verify_tableau(cplx q, int z_samples, std::uint64_t seed, double tol,
                                               const TruncationPolicy& policy = {});

// F^{ll'}_{ll'} for (1,7) against (5,19) and (-3,-5) at c = 1, p = q^3
VerificationReport verify_congruency(cplx q, int z_samples, std::uint64_t seed, double tol,
                                     const TruncationPolicy& policy = {});

// F^{lam}_{l}(z) F^{l}_{lam}(1/z) = 1 for all ordered pairs of the given surfaces
VerificationReport verify_compatibility(const EllipticParams& params, const std::vector<LabelPair>& surfaces,
                                        int z_samples, std::uint64_t seed, double tol,
                                        const TruncationPolicy& policy = {});

// reflection, addition, inversion, q^2-periodicity (N = 2)
std::vector<VerificationReport> verify_F_identities(const EllipticParams& params, int n_samples,
                                                    std::uint64_t seed, double tol,
                                                    const TruncationPolicy& policy = {});

}  // namespace elliptica

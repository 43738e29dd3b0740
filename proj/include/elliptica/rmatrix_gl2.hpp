#pragma once

#include <cstdint>
#include <vector>

#include "elliptica/matrix.hpp"
#include "elliptica/params.hpp"
#include "elliptica/report.hpp"

namespace elliptica {

// EllipticP: W(z, q, p) as used everywhere.  LiteralQ: the nome replaced by q
// (with s = -q^{1/2}), kept only to show that quasi-periodicity breaks.
enum class NomeConvention { EllipticP, LiteralQ };

struct EightVertexWeights {
  cplx a, b, c, d, rho;
};

EightVertexWeights eight_vertex_weights(cplx z, const EllipticParams& params, const TruncationPolicy& policy = {},
                                        NomeConvention nome = NomeConvention::EllipticP);

ComplexMatrix w_matrix(cplx z, const EllipticParams& params, const TruncationPolicy& policy = {},
                       NomeConvention nome = NomeConvention::EllipticP);

cplx tau(cplx z, cplx q, const TruncationPolicy& policy = {});
cplx tau_tilde(cplx z, cplx q, const TruncationPolicy& policy = {});

ComplexMatrix r_matrix(cplx z, const EllipticParams& params, const TruncationPolicy& policy = {},
                       NomeConvention nome = NomeConvention::EllipticP);

// YBE, unitarity, crossing, antisymmetry of W
std::vector<VerificationReport> verify_gl2(const EllipticParams& params, int n_samples, std::uint64_t seed,
                                           double tol, const TruncationPolicy& policy = {});

// unitarity defect, crossing-unitarity, quasi-periodicity, shift accumulation for l in [-3, 3],
// and agreement of the two inverse paths
std::vector<VerificationReport> verify_r_identities(const EllipticParams& params, int n_samples,
                                                    std::uint64_t seed, double tol,
                                                    const TruncationPolicy& policy = {},
                                                    NomeConvention nome = NomeConvention::EllipticP);

}  // namespace elliptica

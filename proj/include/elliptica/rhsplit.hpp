#pragma once

#include <span>

#include "elliptica/exchange.hpp"
#include "elliptica/params.hpp"
#include "elliptica/report.hpp"

namespace elliptica {

struct SplitFactor {
  LabelPair labels;
  int n = 2;
  EllipticParams params;

  void validate() const;  // n matches params.n and the T-side surface holds
};

// N = 2: the squared bracket with (1 - x^2)^{-(|l| - |l'|)};
// N >= 3: the glN product with (1 - x^2)^{-(2|l| - 2|l'|)}
cplx phi(cplx x, const SplitFactor& spec, const TruncationPolicy& policy = {});

// residuals |r(z) - 1| with r(z) = F^{ll'}_{ll'}(z) phi(1/z) / phi(z);
// the extra field also records |r(z) r(1/z) - 1| and the worst r(z)
VerificationReport verify_split(const SplitFactor& spec, std::span<const cplx> z_samples, double tol,
                                const TruncationPolicy& policy = {});

}  // namespace elliptica

#pragma once

#include <cstdint>
#include <vector>

#include "elliptica/report.hpp"
#include "elliptica/specfun.hpp"

namespace elliptica {

// Theta_p(1/z) = -z^{-1} Theta_p(z) and Theta_p(p z) = -z^{-1} Theta_p(z),
// z in 0.1 < |z| < 5, |p| <= 0.5
std::vector<VerificationReport> verify_theta_p(int n_samples, std::uint64_t seed, double tol,
                                               const TruncationPolicy& policy = {});

// series against product form, integer characteristic shift, integer argument
// shift, rational shift exchange; all characteristics (1/2 + j/N, 1/2 + k/N)
std::vector<VerificationReport> verify_theta_characteristics(const std::vector<int>& ns, int n_samples, std::uint64_t seed,
                                                double tol, const TruncationPolicy& policy = {});

}  // namespace elliptica

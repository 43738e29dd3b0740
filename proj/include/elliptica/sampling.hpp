#pragma once

#include <cstdint>
#include <random>

#include "elliptica/specfun.hpp"

namespace elliptica {

// z = r e^{i theta} with r uniform in [rmin, rmax]
inline cplx sample_annulus(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> ur(rmin, rmax), ut(0.0, 2.0 * kPi);
  double r = ur(rng);
  return std::polar(r, ut(rng));
}

inline cplx sample_box(std::mt19937_64& rng, cplx center, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  double a = u(rng);
  return center + cplx(a, u(rng));
}

inline constexpr int kMaxRedraws = 16;

}  // namespace elliptica

#include <limits>
#include <string>
#include <utility>

#include "elliptica/errors.hpp"
#include "elliptica/report.hpp"

namespace elliptica {

inline bool is_sampling_miss(const Error& e) {
  return e.kind() == ErrorKind::PoleProximity || e.kind() == ErrorKind::IllConditioned ||
         e.kind() == ErrorKind::ZeroArgument;
}

// fn(rng) -> pair<SamplePoint, residual>.  An unlucky draw near a pole is
// redrawn a bounded number of times, then recorded as an infinite residual.
template <class Fn>
void sweep(VerificationReport& rep, int n, std::mt19937_64& rng, Fn fn) {
  for (int i = 0; i < n; ++i) {
    for (int attempt = 0;; ++attempt) {
      try {
        auto [pt, r] = fn(rng);
        rep.add(std::move(pt), r);
        break;
      } catch (const Error& e) {
        if (!is_sampling_miss(e)) throw;
        if (attempt + 1 >= kMaxRedraws) {
          rep.add({}, std::numeric_limits<double>::infinity());
          rep.notes.push_back("sample " + std::to_string(i) + ": " + e.what());
          break;
        }
      }
    }
  }
  rep.finalize();
}

}  // namespace elliptica

#pragma once
// Brute-force references, written without touching the library's evaluators.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline cplx qpoch1(cplx z, cplx a, int terms = 60) {
  cplx r = 1.0, an = 1.0;
  for (int n = 0; n < terms; ++n, an *= a) r *= 1.0 - z * an;
  return r;
}

// prod over the box 0 <= n_i <= nmax
inline cplx qpoch_lattice(cplx z, const std::vector<cplx>& bases, int nmax) {
  cplx r = 1.0;
  std::vector<int> idx(bases.size(), 0);
  for (;;) {
    cplx f = z;
    for (size_t i = 0; i < bases.size(); ++i) f *= std::pow(bases[i], idx[i]);
    r *= 1.0 - f;
    size_t k = 0;
    while (k < idx.size() && ++idx[k] > nmax) idx[k++] = 0;
    if (k == idx.size()) return r;
  }
}

// Jacobi triple product: (z;p)(p/z;p)(p;p) = sum_n (-1)^n p^{n(n-1)/2} z^n
inline cplx theta(cplx z, cplx p, int K = 40) {
  cplx s = 0.0;
  for (int n = -K; n <= K; ++n) {
    cplx t = std::pow(p, 0.5 * n * (n - 1)) * std::pow(z, n);
    s += (n % 2 == 0) ? t : -t;
  }
  return s;
}

// xi(z; p, q^4) from four direct double products
inline cplx xi(cplx z, cplx p, cplx q) {
  const cplx q2 = q * q, q4 = q2 * q2;
  auto P = [&](cplx x) { return qpoch_lattice(x, {p, q4}, 45); };
  return P(q2 * z) * P(p * q2 * z) / (P(q4 * z) * P(p * z));
}

// h(x) summed over 200 shells
inline cplx h(cplx x, cplx q) {
  const cplx x2 = x * x, q2 = q * q;
  cplx sum = 0.0;
  for (int n = 0; n < 200; ++n) {
    cplx a = std::pow(q, 4 * n), b = std::pow(q, 4 * n + 2);
    sum += 1.0 / (1.0 - b * x2) - 1.0 / (1.0 - a * x2) + 1.0 / (1.0 - a / x2) - 1.0 / (1.0 - b / x2);
  }
  (void)q2;
  return 2.0 * std::log(q) * ((1.0 + x2) / (1.0 - x2) + 2.0 * sum);
}

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle

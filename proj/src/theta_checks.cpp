#include "elliptica/theta_checks.hpp"

#include <random>

#include "elliptica/matrix.hpp"
#include "elliptica/sampling.hpp"

namespace elliptica {

std::vector<VerificationReport> verify_theta_p(int n_samples, std::uint64_t seed, double tol,
                                               const TruncationPolicy& pol) {
  std::mt19937_64 rng(seed);
  VerificationReport inv("theta.inversion", tol), per("theta.quasi_periodicity", tol);
  auto draw = [](std::mt19937_64& g) { return std::pair{sample_annulus(g, 0.1, 5.0), sample_annulus(g, 0.05, 0.5)}; };
  sweep(inv, n_samples, rng, [&](std::mt19937_64& g) {
    auto [z, p] = draw(g);
    return std::pair{SamplePoint{{{"z", z}, {"p", p}}}, rel_residual(theta_p(1.0 / z, p, pol), -theta_p(z, p, pol) / z)};
  });
  sweep(per, n_samples, rng, [&](std::mt19937_64& g) {
    auto [z, p] = draw(g);
    return std::pair{SamplePoint{{{"z", z}, {"p", p}}}, rel_residual(theta_p(p * z, p, pol), -theta_p(z, p, pol) / z)};
  });
  inv.seed = per.seed = seed;
  return {inv, per};
}

std::vector<VerificationReport> verify_theta_characteristics(const std::vector<int>& ns, int n_samples, std::uint64_t seed,
                                                double tol, const TruncationPolicy& pol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ure(-0.5, 0.5), uim(-0.3, 0.3), utau(0.4, 1.0), ulam(-1.0, 1.0);
  auto draw = [&](std::mt19937_64& g) {
    cplx xi(ure(g), uim(g)), tau(ure(g), utau(g));
    return std::pair{xi, tau};
  };
  auto th = [&](double g1, double g2, cplx xi, cplx tau) { return jacobi_theta_series(g1, g2, xi, tau, pol); };
  auto E = [](cplx x) { return expipi(x); };
  const int lam_int[4][2] = {{1, 0}, {0, 1}, {2, -1}, {-1, 2}};

  std::vector<VerificationReport> out;
  for (int n : ns) {
    const std::string tag = "theta_char[N=" + std::to_string(n) + "].";
    VerificationReport a15(tag + "series_vs_product", tol), a2(tag + "char_shift", tol), a3(tag + "arg_shift", tol),
        a4(tag + "shift_exchange", tol);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double g1 = 0.5 + double(j) / n, g2 = 0.5 + double(k) / n;
        VerificationReport p15("", tol), p2("", tol), p3("", tol), p4("", tol);
        sweep(p15, n_samples, rng, [&](std::mt19937_64& g) {
          auto [xi, tau] = draw(g);
          // the checked evaluation must not throw either
          cplx v = jacobi_theta(RationalCharacteristic::standard(j, k, n), xi, tau, pol);
          return std::pair{SamplePoint{{{"xi", xi}, {"tau", tau}}},
                           rel_residual(jacobi_theta_product(g1, g2, xi, tau, pol), v)};
        });
        sweep(p2, n_samples, rng, [&](std::mt19937_64& g) {
          auto [xi, tau] = draw(g);
          const auto& l = lam_int[g() % 4];
          cplx lhs = th(g1 + l[0], g2 + l[1], xi, tau);
          cplx rhs = E(2.0 * g1 * l[1]) * th(g1, g2, xi, tau);
          return std::pair{SamplePoint{{{"xi", xi}, {"tau", tau}, {"lambda", cplx(l[0], l[1])}}},
                           rel_residual(lhs, rhs)};
        });
        sweep(p3, n_samples, rng, [&](std::mt19937_64& g) {
          auto [xi, tau] = draw(g);
          const auto& l = lam_int[g() % 4];
          const double l1 = l[0], l2 = l[1];
          cplx lhs = th(g1, g2, xi + l1 * tau + l2, tau);
          cplx rhs = E(-l1 * l1 * tau - 2.0 * l1 * xi) * E(2.0 * (g1 * l2 - g2 * l1)) * th(g1, g2, xi, tau);
          return std::pair{SamplePoint{{{"xi", xi}, {"tau", tau}, {"lambda", cplx(l1, l2)}}},
                           rel_residual(lhs, rhs)};
        });
        sweep(p4, n_samples, rng, [&](std::mt19937_64& g) {
          auto [xi, tau] = draw(g);
          // rational lambda on the 1/N grid plus a generic real one
          const double l1 = (g() % 2) ? double(int(g() % (2 * n)) - n) / n : ulam(g);
          const double l2 = ulam(g);
          cplx lhs = th(g1, g2, xi + l1 * tau + l2, tau);
          cplx rhs = E(-l1 * l1 * tau - 2.0 * l1 * (xi + g2 + l2)) * th(g1 + l1, g2 + l2, xi, tau);
          return std::pair{SamplePoint{{{"xi", xi}, {"tau", tau}, {"lambda", cplx(l1, l2)}}},
                           rel_residual(lhs, rhs)};
        });
        auto merge = [](VerificationReport& d, const VerificationReport& s) {
          for (size_t i = 0; i < s.residuals.size(); ++i) d.add(s.samples[i], s.residuals[i]);
          d.notes.insert(d.notes.end(), s.notes.begin(), s.notes.end());
        };
        merge(a15, p15);
        merge(a2, p2);
        merge(a3, p3);
        merge(a4, p4);
      }
    for (auto* r : {&a15, &a2, &a3, &a4}) {
      r->seed = seed;
      out.push_back(std::move(r->finalize()));
    }
  }
  return out;
}

}  // namespace elliptica

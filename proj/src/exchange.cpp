#include "elliptica/exchange.hpp"

#include <random>

#include "elliptica/errors.hpp"
#include "elliptica/rmatrix_glN.hpp"
#include "elliptica/sampling.hpp"
#include "elliptica/surfaces.hpp"

namespace elliptica {

namespace {
constexpr double kSurfaceTol = 1e-10;
}

cplx F_func(int ell, cplx z, const EllipticParams& params, bool starred, const TruncationPolicy& pol) {
  const cplx s = starred ? params.s_star : params.s;
  if (ell < 0) return 1.0 / F_func(-ell, ipow(s, -ell) * z, params, starred, pol);
  cplx r = 1.0;
  for (int j = 1; j <= ell; ++j) r *= tau_tilde_N(ipow(s, -j) * z, params.q, params.n, pol);
  return r;
}

cplx f_exchange(LabelPair lab, cplx z, const EllipticParams& params, const TruncationPolicy& pol) {
  surface_check(lab, params, SurfaceSide::T, kSurfaceTol);
  return F_func(lab.ell_prime, z, params, true, pol) / F_func(lab.ell, z, params, false, pol);
}

cplx big_F(LabelPair lab, LabelPair lab2, cplx z, const EllipticParams& params, const TruncationPolicy& pol) {
  surface_check(lab, params, SurfaceSide::T, kSurfaceTol);
  surface_check(lab2, params, SurfaceSide::T, kSurfaceTol);
  const cplx w = ipow(params.s, lab2.ell) * z;  // gamma^{-1} z
  auto F = [&](int l, cplx x) { return F_func(l, x, params, false, pol); };
  auto Fs = [&](int l, cplx x) { return F_func(l, x, params, true, pol); };
  return F(lab.ell, z) / Fs(lab.ell_prime, z) * Fs(lab.ell_prime, w) / F(lab.ell, w);
}

cplx big_F_equal(LabelPair lab, cplx z, const EllipticParams& params, const TruncationPolicy& pol) {
  if (params.n != 2) throw Error(ErrorKind::DomainError, "equal-label simplification is the N = 2 form");
  surface_check(lab, params, SurfaceSide::T, kSurfaceTol);
  const int L = std::abs(lab.ell), Lp = std::abs(lab.ell_prime);
  const cplx q2 = params.q * params.q;
  auto F = [&](int l, cplx x) { return F_func(l, x, params, false, pol); };
  auto Fs = [&](int l, cplx x) { return F_func(l, x, params, true, pol); };
  return F(L, z) / F(L, ipow(params.s, L) * z) * Fs(Lp, q2 * ipow(params.s_star, Lp) * z) / Fs(Lp, z);
}

const std::array<TableauClass, 4>& tableau_classes() {
  static const std::array<TableauClass, 4> c{{
      {0, 0, {0, 4}},
      {1, 3, {1, 7}},
      {2, 2, {2, 10}},
      {3, 1, {3, 13}},
  }};
  return c;
}

cplx tableau_value(int row, int col, cplx z, cplx q, const TruncationPolicy& pol) {
  if (row < 1 || row > 3 || col < 1 || col > 3) throw Error(ErrorKind::DomainError, "tableau index out of 1..3");
  const cplx q2 = q * q, q3 = q2 * q, q4 = q2 * q2, z2 = z * z;
  auto T = [&](cplx x) { return theta_p(x, q4, pol); };
  auto Td = [&](cplx x) { return theta_p_nonzero(x, q4, pol); };
  auto sq = [](cplx x) { return x * x; };
  auto p4 = [&](cplx x) { return sq(sq(x)); };
  switch (row * 10 + col) {
    case 11:
    case 33: return q2 * sq(T(q3 * z2)) * sq(T(z2 / q)) / p4(Td(q * z2));
    case 12:
    case 23: return q2 * p4(T(q2 * z2)) * p4(T(z2 / q)) / (p4(Td(z2)) * p4(Td(q * z2)));
    case 13: return q2 * sq(T(q2 * z2)) * sq(T(z2 / q2)) / p4(Td(z2));
    case 21:
    case 32: return q2 * p4(T(z2)) * p4(T(q3 * z2)) / (p4(Td(q2 * z2)) * p4(Td(q * z2)));
    case 22: return q4 * p4(T(q3 * z2)) * p4(T(z2 / q)) / sq(p4(Td(q * z2)));
    case 31: return p4(T(z2)) / (q2 * sq(Td(q2 * z2)) * sq(Td(z2 / q2)));
  }
  return 0.0;
}

namespace {
SamplePoint sp(std::initializer_list<std::pair<std::string, cplx>> v) { return SamplePoint{v}; }
}  // namespace

std::vector<VerificationReport> verify_tableau(cplx q, int z_samples, std::uint64_t seed, double tol,
                                               const TruncationPolicy& pol) {
  const EllipticParams params = case_study_params(q);
  const auto& cls = tableau_classes();
  std::mt19937_64 rng(seed);
  std::vector<VerificationReport> out;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) {
      const auto& a = cls[r];
      const auto& b = cls[c];
      VerificationReport rep("tableau[(" + std::to_string(a.ell_bar) + "," + std::to_string(a.ell_prime_bar) +
                                 ")x(" + std::to_string(b.ell_bar) + "," + std::to_string(b.ell_prime_bar) + ")]",
                             tol);
      sweep(rep, z_samples, rng, [&](std::mt19937_64& g) {
        cplx z = sample_annulus(g, 0.7, 1.4);
        cplx got = big_F(a.representative, b.representative, z, params, pol);
        cplx want = tableau_value(r, c, z, q, pol);
        return std::pair{sp({{"z", z}, {"F", got}}), rel_residual(got, want)};
      });
      out.push_back(std::move(rep));
    }

  VerificationReport triv("tableau.trivial_class", tol);
  triv.notes.push_back("(0,0) row and column must be identically 1");
  for (int k = 0; k < 4; ++k) {
    for (bool as_row : {true, false}) {
      LabelPair other = cls[k].representative, zero = cls[0].representative;
      VerificationReport part("", tol);
      sweep(part, z_samples, rng, [&](std::mt19937_64& g) {
        cplx z = sample_annulus(g, 0.7, 1.4);
        cplx v = as_row ? big_F(zero, other, z, params, pol) : big_F(other, zero, z, params, pol);
        return std::pair{sp({{"z", z}, {"F", v}}), std::abs(v - 1.0)};
      });
      for (size_t i = 0; i < part.residuals.size(); ++i) triv.add(part.samples[i], part.residuals[i]);
    }
  }
  triv.finalize();
  out.push_back(std::move(triv));
  for (auto& r : out) r.seed = seed;
  return out;
}

VerificationReport verify_congruency(cplx q, int z_samples, std::uint64_t seed, double tol,
                                     const TruncationPolicy& pol) {
  const EllipticParams params = case_study_params(q);
  std::mt19937_64 rng(seed);
  VerificationReport rep("tableau.congruency", tol);
  rep.notes.push_back("(1,7) against (5,19) and (-3,-5)");
  const LabelPair base{1, 7};
  for (LabelPair other : {LabelPair{5, 19}, LabelPair{-3, -5}}) {
    VerificationReport part("", tol);
    sweep(part, z_samples, rng, [&](std::mt19937_64& g) {
      cplx z = sample_annulus(g, 0.7, 1.4);
      cplx a = big_F(base, base, z, params, pol), b = big_F(other, other, z, params, pol);
      return std::pair{sp({{"l", cplx(other.ell)}, {"z", z}}), rel_residual(b, a)};
    });
    for (size_t i = 0; i < part.residuals.size(); ++i) rep.add(part.samples[i], part.residuals[i]);
  }
  rep.seed = seed;
  return rep.finalize();
}

VerificationReport verify_compatibility(const EllipticParams& params, const std::vector<LabelPair>& surfaces,
                                        int z_samples, std::uint64_t seed, double tol, const TruncationPolicy& pol) {
  std::mt19937_64 rng(seed);
  VerificationReport rep("structure.compatibility", tol);
  for (LabelPair a : surfaces)
    for (LabelPair b : surfaces) {
      VerificationReport part("", tol);
      sweep(part, z_samples, rng, [&](std::mt19937_64& g) {
        cplx z = sample_annulus(g, 0.7, 1.4);
        cplx v = big_F(a, b, z, params, pol) * big_F(b, a, 1.0 / z, params, pol);
        return std::pair{sp({{"l", cplx(a.ell, a.ell_prime)}, {"lam", cplx(b.ell, b.ell_prime)}, {"z", z}}),
                         std::abs(v - 1.0)};
      });
      for (size_t i = 0; i < part.residuals.size(); ++i) rep.add(part.samples[i], part.residuals[i]);
      rep.notes.insert(rep.notes.end(), part.notes.begin(), part.notes.end());
    }
  rep.seed = seed;
  return rep.finalize();
}

std::vector<VerificationReport> verify_F_identities(const EllipticParams& params, int n_samples, std::uint64_t seed,
                                                    double tol, const TruncationPolicy& pol) {
  params.validate();
  std::mt19937_64 rng(seed);
  const cplx s = params.s, q2 = params.q * params.q;
  auto F = [&](int l, cplx x) { return F_func(l, x, params, false, pol); };
  auto tt = [&](cplx x) { return tau_tilde_N(x, params.q, params.n, pol); };
  std::vector<VerificationReport> out;

  auto collect = [&](VerificationReport& dst, VerificationReport& part) {
    for (size_t i = 0; i < part.residuals.size(); ++i) dst.add(part.samples[i], part.residuals[i]);
    dst.notes.insert(dst.notes.end(), part.notes.begin(), part.notes.end());
  };

  VerificationReport p1("F.reflection", tol);
  for (int l = 1; l <= 3; ++l) {
    VerificationReport part("", tol);
    sweep(part, n_samples, rng, [&](std::mt19937_64& g) {
      cplx z = sample_annulus(g, 0.5, 2.0);
      return std::pair{sp({{"l", cplx(l)}, {"z", z}}),
                       rel_residual(F(l, z) * F(-l, 1.0 / z), tt(ipow(s, -l) * z) / tt(z))};
    });
    collect(p1, part);
  }
  out.push_back(std::move(p1.finalize()));

  VerificationReport p2("F.addition", tol);
  for (auto [l, m] : {std::pair{2, 1}, {1, 2}, {3, 2}, {-2, 1}}) {
    VerificationReport part("", tol);
    sweep(part, n_samples, rng, [&](std::mt19937_64& g) {
      cplx z = sample_annulus(g, 0.5, 2.0);
      return std::pair{sp({{"l", cplx(l)}, {"n", cplx(m)}, {"z", z}}),
                       rel_residual(F(l, ipow(s, -m) * z), F(l + m, z) / F(m, z))};
    });
    collect(p2, part);
  }
  out.push_back(std::move(p2.finalize()));

  VerificationReport inv("F.inversion", tol);
  for (int l = 1; l <= 3; ++l) {
    VerificationReport part("", tol);
    sweep(part, n_samples, rng, [&](std::mt19937_64& g) {
      cplx z = sample_annulus(g, 0.5, 2.0);
      return std::pair{sp({{"l", cplx(l)}, {"z", z}}), std::abs(F(-l, z) * F(l, ipow(s, l) * z) - 1.0)};
    });
    collect(inv, part);
  }
  out.push_back(std::move(inv.finalize()));

  if (params.n == 2) {
    VerificationReport per("F.q2_periodicity", tol);
    for (int l = -3; l <= 3; ++l) {
      VerificationReport part("", tol);
      sweep(part, n_samples, rng, [&](std::mt19937_64& g) {
        cplx z = sample_annulus(g, 0.5, 2.0);
        return std::pair{sp({{"l", cplx(l)}, {"z", z}}), rel_residual(F(l, q2 * z), F(l, z))};
      });
      collect(per, part);
    }
    out.push_back(std::move(per.finalize()));
  }
  for (auto& r : out) r.seed = seed;
  return out;
}

}  // namespace elliptica

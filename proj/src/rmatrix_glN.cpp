#include "elliptica/rmatrix_glN.hpp"

#include <random>

#include "elliptica/errors.hpp"
#include "elliptica/exchange.hpp"
#include "elliptica/rmatrix_gl2.hpp"
#include "elliptica/sampling.hpp"

namespace elliptica {

void XiMuTauPoint::validate(int n) const {
  if (n < 2) throw Error(ErrorKind::DomainError, "N must be >= 2");
  if (!(tau.imag() > 0.0)) throw Error(ErrorKind::DomainError, "Im(tau) must be positive");
  if (!(mu.imag() > 0.0)) throw Error(ErrorKind::DomainError, "Im(mu) must be positive (|q| < 1)");
}

EllipticParams XiMuTauPoint::params(int n) const {
  validate(n);
  EllipticParams r;
  r.q = q();
  r.s = s();
  r.s_star = r.s;
  r.n = n;
  return r;
}

GhMatrices gh_matrices(int n, SqrtGRoot root) {
  if (n < 2) throw Error(ErrorKind::DomainError, "N must be >= 2");
  GhMatrices m;
  m.n = n;
  m.g = ComplexMatrix::Zero(n, n);
  m.h = ComplexMatrix::Zero(n, n);
  m.g_half = ComplexMatrix::Zero(n, n);
  const bool character = root == SqrtGRoot::Character && n % 2 == 1;
  for (int j = 0; j < n; ++j) {
    m.g(j, j) = expipi(2.0 * j / n);
    m.h(j, (j + 1) % n) = 1.0;
    // for odd N, omega^{j(N+1)/2} squares to omega^j and is multiplicative in j mod N
    int e = character ? (j * ((n + 1) / 2)) % n : 0;
    m.g_half(j, j) = character ? expipi(2.0 * e / n) : expipi(static_cast<double>(j) / n);
  }
  ComplexMatrix gh_inv = m.g_half.inverse();
  m.I.reserve(n * n);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      ComplexMatrix t = m.g_half;
      for (int k = 0; k < a2; ++k) t = t * m.g;
      for (int k = 0; k < a1; ++k) t = t * m.h;
      m.I.push_back(t * gh_inv);
    }
  return m;
}

namespace {

// checked theta value; the product form's factors are guarded since it is used as a divisor
cplx theta_char_nonzero(const RationalCharacteristic& ch, cplx x, cplx tau, const TruncationPolicy& pol) {
  const double g1 = static_cast<double>(ch.gamma1.numerator()) / static_cast<double>(ch.gamma1.denominator());
  const double g2 = static_cast<double>(ch.gamma2.numerator()) / static_cast<double>(ch.gamma2.denominator());
  cplx arg = -expipi(2.0 * g2 + 2.0 * tau * (g1 + 0.5) + 2.0 * x);
  (void)theta_p_nonzero(arg, expipi(2.0 * tau), pol);
  return jacobi_theta(ch, x, tau, pol);
}

cplx kappa_inv(cplx z2, cplx q, cplx p, int n, const TruncationPolicy& pol) {
  const cplx b = ipow(q, 2 * n), q2 = q * q, c = ipow(q, 2 * n - 2);
  auto num = [&](cplx x) { return qpoch(x, {p, b}, pol); };
  auto den = [&](cplx x) { return qpoch_nonzero(x, {p, b}, pol); };
  return num(b / z2) * num(q2 * z2) * num(p / z2) * num(p * c * z2) /
         (den(b * z2) * den(q2 / z2) * den(p * z2) * den(p * c / z2));
}

}  // namespace

ComplexMatrix belavin_w(const XiMuTauPoint& pt, int n, const TruncationPolicy& pol, SqrtGRoot root) {
  pt.validate(n);
  const auto gh = gh_matrices(n, root);
  const cplx xi = pt.xi, mu = pt.mu, tau = pt.tau;
  const auto half = RationalCharacteristic::standard(0, 0, n);

  ComplexMatrix sum = ComplexMatrix::Zero(n * n, n * n);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      auto ch = RationalCharacteristic::standard(a1, a2, n);
      cplx w = jacobi_theta(ch, xi + mu / double(n), tau, pol) /
               (double(n) * theta_char_nonzero(ch, mu / double(n), tau, pol));
      const ComplexMatrix& I = gh.I[a1 * n + a2];
      sum += w * kron(I, I.inverse());
    }
  const cplx z = pt.z();
  cplx pref = expipi((2.0 / n - 2.0) * xi) * kappa_inv(z * z, pt.q(), pt.p(), n, pol) *
              jacobi_theta(half, mu, tau, pol) / theta_char_nonzero(half, xi + mu, tau, pol);
  return pref * sum;
}

cplx tau_N(cplx xi_arg, cplx mu, int n, const TruncationPolicy& pol) {
  const cplx x = expipi(xi_arg), q = expipi(mu), b = ipow(q, 2 * n), x2 = x * x;
  return expipi((2.0 / n - 2.0) * xi_arg) * theta_p(q * x2, b, pol) / theta_p_nonzero(q / x2, b, pol);
}

cplx tau_tilde_N(cplx z, cplx q, int n, const TruncationPolicy& pol) {
  if (z == 0.0) throw Error(ErrorKind::ZeroArgument, "z = 0");
  const cplx b = ipow(q, 2 * n), q2 = q * q, z2 = z * z;
  return std::exp((2.0 / n - 2.0) * std::log(q)) * theta_p(q2 * z2, b, pol) * theta_p(q2 / z2, b, pol) /
         (theta_p_nonzero(z2, b, pol) * theta_p_nonzero(1.0 / z2, b, pol));
}

ComplexMatrix r_matrix_N(const XiMuTauPoint& pt, int n, const TruncationPolicy& pol, SqrtGRoot root) {
  return tau_N(pt.mu / 2.0 - pt.xi, pt.mu, n, pol) * belavin_w(pt, n, pol, root);
}

namespace {

SamplePoint sp(std::initializer_list<std::pair<std::string, cplx>> v) { return SamplePoint{v}; }

int mod(int a, int n) { return ((a % n) + n) % n; }

double zn_symmetry_defect(const ComplexMatrix& w, int n) {
  double scale = w.cwiseAbs().maxCoeff(), worst = 0.0;
  for (int k = 1; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            cplx shifted = w(mod(a + k, n) * n + mod(b + k, n), mod(c + k, n) * n + mod(d + k, n));
            worst = std::max(worst, std::abs(shifted - w(a * n + b, c * n + d)));
          }
  return worst / scale;
}

double support_defect(const ComplexMatrix& w, int n) {
  double scale = w.cwiseAbs().maxCoeff(), worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (mod(a + b - c - d, n) != 0) worst = std::max(worst, std::abs(w(a * n + b, c * n + d)));
  return worst / scale;
}

ComplexMatrix matrix_power(const ComplexMatrix& g, int l) {
  ComplexMatrix base = l < 0 ? ComplexMatrix(g.inverse()) : g;
  ComplexMatrix r = identity(static_cast<int>(g.rows()));
  for (int k = 0; k < std::abs(l); ++k) r = r * base;
  return r;
}

}  // namespace

std::vector<VerificationReport> verify_glN(const XiMuTauPoint& base, int n, int n_samples, std::uint64_t seed,
                                           double tol, const TruncationPolicy& pol, SqrtGRoot root) {
  base.validate(n);
  std::mt19937_64 rng(seed);
  const auto gh = gh_matrices(n, root);
  const ComplexMatrix G1 = kron(gh.shift_matrix(), identity(n));
  const ComplexMatrix G1inv = G1.inverse();
  const ComplexMatrix P = permutation(n);
  const int d = n * n;
  auto at = [&](cplx xi) { return XiMuTauPoint{xi, base.mu, base.tau}; };
  auto draw = [&](std::mt19937_64& g) { return sample_box(g, base.xi, 0.15); };
  const EllipticParams params = base.params(n);
  std::vector<VerificationReport> out;
  const std::string tag = "glN[" + std::to_string(n) + "].";

  VerificationReport sym(tag + "zn_symmetry", tol);
  sweep(sym, n_samples, rng, [&](std::mt19937_64& g) {
    cplx x = draw(g);
    return std::pair{sp({{"xi", x}}), zn_symmetry_defect(belavin_w(at(x), n, pol, root), n)};
  });
  out.push_back(std::move(sym));

  VerificationReport sup(tag + "support", tol);
  sweep(sup, n_samples, rng, [&](std::mt19937_64& g) {
    cplx x = draw(g);
    return std::pair{sp({{"xi", x}}), support_defect(belavin_w(at(x), n, pol, root), n)};
  });
  out.push_back(std::move(sup));

  VerificationReport tinv(tag + "tau_inversion", tol);
  sweep(tinv, n_samples, rng, [&](std::mt19937_64& g) {
    cplx x = draw(g);
    return std::pair{sp({{"xi", x}}), std::abs(tau_N(x, base.mu, n, pol) * tau_N(-x, base.mu, n, pol) - 1.0)};
  });
  out.push_back(std::move(tinv));

  VerificationReport unit(tag + "w_unitarity", tol);
  sweep(unit, n_samples, rng, [&](std::mt19937_64& g) {
    cplx x = draw(g);
    ComplexMatrix lhs = belavin_w(at(x), n, pol, root) * P * belavin_w(at(-x), n, pol, root) * P;
    return std::pair{sp({{"xi", x}}), rel_residual(lhs, identity(d))};
  });
  out.push_back(std::move(unit));

  VerificationReport cu(tag + "crossing_unitarity", tol);
  sweep(cu, n_samples, rng, [&](std::mt19937_64& g) {
    cplx x = draw(g);
    ComplexMatrix lhs = inverse_guarded(transpose_second(r_matrix_N(at(x), n, pol, root), n));
    ComplexMatrix rhs =
        transpose_second(inverse_guarded(r_matrix_N(at(x + double(n) * base.mu), n, pol, root)), n);
    return std::pair{sp({{"xi", x}}), rel_residual(lhs, rhs)};
  });
  out.push_back(std::move(cu));

  VerificationReport qp(tag + "quasi_periodicity", tol);
  qp.notes.push_back("conjugation (G x 1)^{-1} R (G x 1), G = g^{1/2} h g^{1/2}");
  sweep(qp, n_samples, rng, [&](std::mt19937_64& g) {
    cplx x = draw(g);
    ComplexMatrix lhs = r_matrix_N(at(x + base.tau + 1.0), n, pol, root);
    ComplexMatrix rhs = G1inv * r_matrix_N(at(x), n, pol, root) * G1 / tau_tilde_N(expipi(x), params.q, n, pol);
    return std::pair{sp({{"xi", x}}), rel_residual(lhs, rhs)};
  });
  out.push_back(std::move(qp));

  VerificationReport acc(tag + "shift_accumulation", tol);
  acc.notes.push_back("l in [-2, 2]: R(s^{-l} z) = F(l, z) (G^l x 1) R(z) (G^{-l} x 1)");
  for (int l = -2; l <= 2; ++l) {
    ComplexMatrix Gl = matrix_power(G1, l), Gml = matrix_power(G1, -l);
    VerificationReport part("", tol);
    sweep(part, n_samples, rng, [&](std::mt19937_64& g) {
      cplx x = draw(g);
      ComplexMatrix lhs = r_matrix_N(at(x - double(l) * (base.tau + 1.0)), n, pol, root);
      ComplexMatrix rhs = F_func(l, expipi(x), params, false, pol) * (Gl * r_matrix_N(at(x), n, pol, root) * Gml);
      return std::pair{sp({{"l", cplx(l)}, {"xi", x}}), rel_residual(lhs, rhs)};
    });
    for (size_t i = 0; i < part.residuals.size(); ++i) acc.add(part.samples[i], part.residuals[i]);
    acc.notes.insert(acc.notes.end(), part.notes.begin(), part.notes.end());
  }
  acc.finalize();
  out.push_back(std::move(acc));

  VerificationReport ybe(tag + "ybe", tol);
  ybe.informational = true;
  ybe.notes.push_back("extra check: YBE is not asserted for this matrix, reported only");
  sweep(ybe, n_samples, rng, [&](std::mt19937_64& g) {
    cplx x1 = draw(g), x2 = draw(g);
    ComplexMatrix a = embed12(belavin_w(at(x1), n, pol, root), n);
    ComplexMatrix b = embed13(belavin_w(at(x2), n, pol, root), n);
    ComplexMatrix c = embed23(belavin_w(at(x2 - x1), n, pol, root), n);
    return std::pair{sp({{"xi1", x1}, {"xi2", x2}}), rel_residual(a * b * c, c * b * a)};
  });
  out.push_back(std::move(ybe));

  for (auto& r : out) r.seed = seed;
  return out;
}

VerificationReport check_n2_proportionality(const XiMuTauPoint& base, int n_samples, std::uint64_t seed, double tol,
                                            const TruncationPolicy& pol) {
  base.validate(2);
  std::mt19937_64 rng(seed);
  const EllipticParams params = base.params(2);
  VerificationReport rep("glN[2].eight_vertex_proportionality", tol);
  nlohmann::json ratios = nlohmann::json::array();
  sweep(rep, n_samples, rng, [&](std::mt19937_64& g) {
    cplx x = sample_box(g, base.xi, 0.15);
    ComplexMatrix b = belavin_w(XiMuTauPoint{x, base.mu, base.tau}, 2, pol);
    ComplexMatrix e = w_matrix(expipi(x), params, pol);
    const double scale = e.cwiseAbs().maxCoeff();
    cplx r0 = 0.0;
    double worst = 0.0;
    bool first = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (std::abs(e(i, j)) > 1e-12 * scale) {
          cplx r = b(i, j) / e(i, j);
          if (first) r0 = r, first = false;
          worst = std::max(worst, std::abs(r - r0) / std::abs(r0));
        } else {
          worst = std::max(worst, std::abs(b(i, j)) / b.cwiseAbs().maxCoeff());
        }
      }
    ratios.push_back(to_json(r0));
    return std::pair{sp({{"xi", x}, {"ratio", r0}}), worst};
  });
  rep.extra["common_ratio"] = ratios;
  rep.seed = seed;
  return rep;
}

}  // namespace elliptica

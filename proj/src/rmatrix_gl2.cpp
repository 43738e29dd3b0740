#include "elliptica/rmatrix_gl2.hpp"

#include <random>

#include "elliptica/errors.hpp"
#include "elliptica/exchange.hpp"
#include "elliptica/sampling.hpp"

namespace elliptica {

EightVertexWeights eight_vertex_weights(cplx z, const EllipticParams& params, const TruncationPolicy& pol,
                                        NomeConvention nome) {
  if (z == 0.0) throw Error(ErrorKind::ZeroArgument, "z = 0");
  const cplx q = params.q;
  const cplx s = nome == NomeConvention::EllipticP ? params.s : -std::sqrt(q);
  const cplx p = s * s, P = p * p, q2 = q * q, z2 = z * z;
  auto th = [&](cplx x) { return theta_p(x, P, pol); };
  auto thd = [&](cplx x) { return theta_p_nonzero(x, P, pol); };

  EightVertexWeights w;
  w.a = th(q2 * z2) * th(p * q2) / (thd(p * q2 * z2) * thd(q2) * z);
  w.b = q / z * th(z2) * th(p * q2) / (thd(p * z2) * thd(q2));
  w.c = 1.0;
  // -s/(q z^2): the branch of p^{1/2} under which quasi-periodicity holds
  w.d = -s / (q * z2) * th(z2) * th(q2 * z2) / (thd(p * z2) * thd(p * q2 * z2));

  cplx pp = qpoch(P, {P}, pol);
  cplx pq = qpoch_nonzero(p, {p}, pol);
  w.rho = pp / (pq * pq) * th(p * z2) * th(q2) / thd(q2 * z2) * xi(z2, p, q, pol) /
          xi_nonzero(1.0 / z2, p, q, pol);
  return w;
}

ComplexMatrix w_matrix(cplx z, const EllipticParams& params, const TruncationPolicy& policy,
                       NomeConvention nome) {
  auto w = eight_vertex_weights(z, params, policy, nome);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = w.a;
  m(1, 1) = m(2, 2) = w.b;
  m(1, 2) = m(2, 1) = w.c;
  m(0, 3) = m(3, 0) = w.d;
  return w.rho * m;
}

cplx tau(cplx z, cplx q, const TruncationPolicy& pol) {
  if (z == 0.0) throw Error(ErrorKind::ZeroArgument, "z = 0");
  const cplx q4 = q * q * q * q, z2 = z * z;
  return theta_p(q * z2, q4, pol) / (z * theta_p_nonzero(q / z2, q4, pol));
}

cplx tau_tilde(cplx z, cplx q, const TruncationPolicy& pol) {
  if (z == 0.0) throw Error(ErrorKind::ZeroArgument, "z = 0");
  const cplx q2 = q * q, q4 = q2 * q2, z2 = z * z;
  cplx t = z / std::sqrt(q) * theta_p(q2 * z2, q4, pol) / theta_p_nonzero(z2, q4, pol);
  return -t * t;
}

ComplexMatrix r_matrix(cplx z, const EllipticParams& params, const TruncationPolicy& policy,
                       NomeConvention nome) {
  return tau(std::sqrt(params.q) / z, params.q, policy) * w_matrix(z, params, policy, nome);
}

namespace {

SamplePoint pt(std::initializer_list<std::pair<std::string, cplx>> v) { return SamplePoint{v}; }

ComplexMatrix flip(const ComplexMatrix& m) {
  static const ComplexMatrix P = permutation(2);
  return P * m * P;
}

}  // namespace

std::vector<VerificationReport> verify_gl2(const EllipticParams& params, int n_samples, std::uint64_t seed,
                                           double tol, const TruncationPolicy& pol) {
  params.validate();
  std::mt19937_64 rng(seed);
  const ComplexMatrix sx1 = kron(sigma_x(), identity(2));
  const ComplexMatrix sz1 = kron(sigma_z(), identity(2));
  auto W = [&](cplx z) { return w_matrix(z, params, pol); };
  std::vector<VerificationReport> out;

  VerificationReport ybe("gl2.ybe", tol);
  sweep(ybe, n_samples, rng, [&](std::mt19937_64& g) {
    cplx z1 = sample_annulus(g, 0.5, 2.0), z2 = sample_annulus(g, 0.5, 2.0);
    ComplexMatrix a = embed12(W(z1), 2), b = embed13(W(z2), 2), c = embed23(W(z2 / z1), 2);
    return std::pair{pt({{"z1", z1}, {"z2", z2}}), rel_residual(a * b * c, c * b * a)};
  });
  out.push_back(std::move(ybe));

  VerificationReport unit("gl2.unitarity", tol);
  sweep(unit, n_samples, rng, [&](std::mt19937_64& g) {
    cplx z = sample_annulus(g, 0.5, 2.0);
    return std::pair{pt({{"z", z}}), rel_residual(W(z) * flip(W(1.0 / z)), identity(4))};
  });
  out.push_back(std::move(unit));

  VerificationReport cross("gl2.crossing", tol);
  sweep(cross, n_samples, rng, [&](std::mt19937_64& g) {
    cplx z = sample_annulus(g, 0.5, 2.0);
    ComplexMatrix lhs = transpose_first(flip(W(1.0 / z)), 2);
    ComplexMatrix rhs = sx1 * W(-z / params.q) * sx1;
    return std::pair{pt({{"z", z}}), rel_residual(lhs, rhs)};
  });
  out.push_back(std::move(cross));

  VerificationReport anti("gl2.antisymmetry", tol);
  sweep(anti, n_samples, rng, [&](std::mt19937_64& g) {
    cplx z = sample_annulus(g, 0.5, 2.0);
    ComplexMatrix rhs = -(sz1 * W(z) * sz1);
    return std::pair{pt({{"z", z}}), rel_residual(W(-z), rhs)};
  });
  out.push_back(std::move(anti));

  for (auto& r : out) r.seed = seed;
  return out;
}

std::vector<VerificationReport> verify_r_identities(const EllipticParams& params, int n_samples,
                                                    std::uint64_t seed, double tol,
                                                    const TruncationPolicy& pol, NomeConvention nome) {
  params.validate();
  std::mt19937_64 rng(seed);
  const cplx q = params.q, s = params.s;
  const ComplexMatrix sx1 = kron(sigma_x(), identity(2));
  auto R = [&](cplx z) { return r_matrix(z, params, pol, nome); };
  std::vector<VerificationReport> out;

  VerificationReport unit("gl2.r_unitarity_defect", tol);
  sweep(unit, n_samples, rng, [&](std::mt19937_64& g) {
    cplx z = sample_annulus(g, 0.5, 2.0);
    ComplexMatrix rhs = tau_tilde(z, q, pol) * identity(4);
    return std::pair{pt({{"z", z}}), rel_residual(R(z) * flip(R(1.0 / z)), rhs)};
  });
  out.push_back(std::move(unit));

  VerificationReport cu("gl2.crossing_unitarity", tol);
  sweep(cu, n_samples, rng, [&](std::mt19937_64& g) {
    cplx z = sample_annulus(g, 0.5, 2.0);
    ComplexMatrix lhs = inverse_guarded(transpose_second(R(z), 2));
    ComplexMatrix rhs = transpose_second(inverse_guarded(R(q * q * z)), 2);
    return std::pair{pt({{"z", z}}), rel_residual(lhs, rhs)};
  });
  out.push_back(std::move(cu));

  VerificationReport qp("gl2.quasi_periodicity", tol);
  if (nome == NomeConvention::LiteralQ) qp.notes.push_back("nome convention: literal q");
  sweep(qp, n_samples, rng, [&](std::mt19937_64& g) {
    cplx z = sample_annulus(g, 0.5, 2.0);
    ComplexMatrix rhs = (sx1 * R(z) * sx1) / tau_tilde(z, q, pol);
    return std::pair{pt({{"z", z}}), rel_residual(R(s * z), rhs)};
  });
  out.push_back(std::move(qp));

  VerificationReport acc("gl2.shift_accumulation", tol);
  acc.notes.push_back("l in [-3, 3]");
  for (int l = -3; l <= 3; ++l) {
    ComplexMatrix sxl = (l % 2 == 0) ? identity(4) : sx1;
    VerificationReport part("", tol);
    sweep(part, n_samples, rng, [&](std::mt19937_64& g) {
      cplx z = sample_annulus(g, 0.5, 2.0);
      ComplexMatrix rhs = F_func(l, z, params, false, pol) * (sxl * R(z) * sxl);
      return std::pair{pt({{"l", cplx(l)}, {"z", z}}), rel_residual(R(ipow(s, -l) * z), rhs)};
    });
    for (size_t i = 0; i < part.residuals.size(); ++i) acc.add(part.samples[i], part.residuals[i]);
    acc.notes.insert(acc.notes.end(), part.notes.begin(), part.notes.end());
  }
  acc.finalize();
  out.push_back(std::move(acc));

  VerificationReport inv("gl2.inverse_paths", tol);
  sweep(inv, n_samples, rng, [&](std::mt19937_64& g) {
    cplx z = sample_annulus(g, 0.5, 2.0);
    ComplexMatrix direct = inverse_guarded(R(z));
    ComplexMatrix via_unitarity = flip(R(1.0 / z)) / tau_tilde(z, q, pol);
    return std::pair{pt({{"z", z}}), rel_residual(direct, via_unitarity)};
  });
  out.push_back(std::move(inv));

  for (auto& r : out) r.seed = seed;
  return out;
}

}  // namespace elliptica

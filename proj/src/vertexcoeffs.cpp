#include "elliptica/vertexcoeffs.hpp"

#include <cmath>

#include "elliptica/errors.hpp"
#include "elliptica/rmatrix_gl2.hpp"
#include "elliptica/surfaces.hpp"

namespace elliptica {

cplx coeff(const CoeffSelector& sel, cplx w, const EllipticParams& params, const TruncationPolicy& pol) {
  if (sel.sign != 1 && sel.sign != -1) throw Error(ErrorKind::DomainError, "coefficient sign must be +1 or -1");
  const cplx s = sel.starred ? params.s_star : params.s;
  const cplx p = s * s, q = params.q, ph = -s;
  const double e = sel.sign;
  cplx v;
  if (sel.family == CoeffFamily::Alpha)
    v = qpoch(e * ph * q * w, {p}, pol) / qpoch_nonzero(e * ph / q * w, {p}, pol);
  else
    v = qpoch(-e * q * w, {p}, pol) / qpoch_nonzero(-e * p / q * w, {p}, pol);
  if (!sel.reduced) v /= xi_nonzero(w * w, p, q, pol);
  return v;
}

std::vector<VerificationReport> verify_rho_identities(std::span<const cplx> zs, const EllipticParams& params,
                                                      double tol, const TruncationPolicy& pol) {
  params.validate();
  VerificationReport apd("vo.rho(a+d)", tol), amd("vo.rho(a-d)", tol), bpc("vo.rho(b+c)", tol),
      bmc("vo.rho(b-c)", tol), bmc_fixed("vo.rho(b-c).sign_corrected", tol);
  bmc_fixed.notes.push_back("rho(b - c) = -beta^-(1/z)/beta^-(z)");
  auto C = [&](CoeffFamily f, int sg, cplx w) { return coeff({f, sg, false, false}, w, params, pol); };
  for (cplx z : zs) {
    auto w = eight_vertex_weights(z, params, pol);
    SamplePoint pt{{{"z", z}}};
    cplx ap = C(CoeffFamily::Alpha, 1, 1.0 / z) / (z * C(CoeffFamily::Alpha, 1, z));
    cplx am = C(CoeffFamily::Alpha, -1, 1.0 / z) / (z * C(CoeffFamily::Alpha, -1, z));
    cplx bp = C(CoeffFamily::Beta, 1, 1.0 / z) / C(CoeffFamily::Beta, 1, z);
    cplx bm = C(CoeffFamily::Beta, -1, 1.0 / z) / C(CoeffFamily::Beta, -1, z);
    apd.add(pt, rel_residual(w.rho * (w.a + w.d), ap));
    amd.add(pt, rel_residual(w.rho * (w.a - w.d), am));
    bpc.add(pt, rel_residual(w.rho * (w.b + w.c), bp));
    bmc.add(pt, rel_residual(w.rho * (w.b - w.c), bm));
    bmc_fixed.add(pt, rel_residual(w.rho * (w.b - w.c), -bm));
  }
  std::vector<VerificationReport> out{apd, amd, bpc, bmc, bmc_fixed};
  for (auto& r : out) r.finalize();
  return out;
}

const char* to_string(Singularity s) {
  switch (s) {
    case Singularity::Zero: return "zero";
    case Singularity::Pole: return "pole";
    case Singularity::Regular: return "regular";
  }
  return "?";
}

double singularity_order(const std::function<cplx(cplx)>& f, cplx x, double delta) {
  auto mean = [&](double d) {
    double m = 0.0;
    for (int k = 0; k < 4; ++k) m += std::abs(f(x * (1.0 + d * std::polar(1.0, 0.3 + k * kPi / 2))));
    return m / 4.0;
  };
  return std::log10(mean(delta) / mean(delta / 10.0));
}

Singularity classify_order(double o) {
  if (o > 0.5) return Singularity::Zero;
  if (o < -0.5) return Singularity::Pole;
  return Singularity::Regular;
}

namespace {

using Fn = std::function<cplx(cplx)>;

std::pair<Fn, Fn> phi_side(int l, const EllipticParams& pr, const TruncationPolicy& pol) {
  const cplx q = pr.q;
  if (l % 2 == 0) {
    CoeffSelector b{CoeffFamily::Beta, 1, false, true};
    return {[=, &pol](cplx x) { return coeff(b, -q / x, pr, pol); },
            [=, &pol](cplx x) { return coeff(b, -x / q, pr, pol); }};
  }
  CoeffSelector a{CoeffFamily::Alpha, 1, false, true};
  return {[=, &pol](cplx x) { return q / x * coeff(a, -q / x, pr, pol); },
          [=, &pol](cplx x) { return coeff(a, -x / q, pr, pol); }};
}

std::pair<Fn, Fn> psi_side(int lp, const EllipticParams& pr, const TruncationPolicy& pol) {
  const cplx q = pr.q, q2 = q * q;
  if (lp % 2 == 0) {
    CoeffSelector b{CoeffFamily::Beta, 1, true, true};
    return {[=, &pol](cplx x) {
              return (1.0 - 1.0 / x) * (1.0 - q2 / x) / ((1.0 - q2 / (x * x)) * coeff(b, -q / x, pr, pol));
            },
            [=, &pol](cplx x) {
              return (1.0 - x) * (1.0 - x / q2) / ((1.0 - x * x / q2) * coeff(b, -x / q, pr, pol));
            }};
  }
  CoeffSelector a{CoeffFamily::Alpha, 1, true, true};
  return {[=, &pol](cplx x) { return (1.0 / x) / ((1.0 - q2 / (x * x)) * coeff(a, -q / x, pr, pol)); },
          [=, &pol](cplx x) { return -(1.0 / q) / ((1.0 - x * x / q2) * coeff(a, -x / q, pr, pol)); }};
}

LocusEntry probe(LabelPair surf, const std::string& side, int label, cplx x, const std::pair<Fn, Fn>& fns) {
  LocusEntry e;
  e.surface = surf;
  e.side = side;
  e.label = label;
  e.x = x;
  e.order_lhs = singularity_order(fns.first, x);
  e.order_rhs = singularity_order(fns.second, x);
  e.lhs = classify_order(e.order_lhs);
  e.rhs = classify_order(e.order_rhs);
  if (label >= 0) {
    e.expect_lhs = Singularity::Regular;
    e.expect_rhs = Singularity::Zero;
  } else {
    e.expect_lhs = Singularity::Pole;
    e.expect_rhs = Singularity::Regular;
  }
  e.matches = e.lhs == e.expect_lhs && e.rhs == e.expect_rhs;
  return e;
}

std::string pair_str(LabelPair l) {
  return "(" + std::to_string(l.ell) + "," + std::to_string(l.ell_prime) + ")";
}

}  // namespace

SingularityScan singularity_scan(int lo, int hi, cplx q, const TruncationPolicy& pol) {
  SingularityScan scan;
  scan.locus = VerificationReport("vo.locus_coincidence", 1e-12);
  scan.pattern = VerificationReport("vo.T_side_pattern", 0.0);
  scan.mirror = VerificationReport("vo.S_side_mirror", 0.0);
  scan.mirror.notes.push_back("S-side surface (m, m') read as the T-side surface (-m, -m')");
  for (int l = lo; l <= hi; ++l)
    for (int lp = lo; lp <= hi; ++lp) {
      if (l == lp) continue;
      LabelPair lab{l, lp};
      EllipticParams pr;
      try {
        pr = params_from_solution(q, solve_exponent(lab, Rational(1), 2));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Inconsistent && e.kind() != ErrorKind::DomainError) throw;
        scan.skipped.push_back(lab);
        continue;
      }
      const cplx xT = ipow(pr.s, -l), xS = q * q * ipow(pr.s_star, -lp);
      scan.locus.add(SamplePoint{{{"l", cplx(l)}, {"l'", cplx(lp)}, {"x_T", xT}, {"x_S", xS}}},
                     std::abs(xT - xS) / std::abs(xT));
      LocusEntry a = probe(lab, "phi", l, xT, phi_side(l, pr, pol));
      LocusEntry b = probe(lab, "psi", lp, xS, psi_side(lp, pr, pol));
      for (const LocusEntry* e : {&a, &b}) {
        SamplePoint pt{{{"l", cplx(l)}, {"l'", cplx(lp)}, {"x", e->x}}};
        scan.pattern.add(pt, e->matches ? 0.0 : 1.0);
        if (!e->matches)
          scan.pattern.notes.push_back(pair_str(lab) + " " + e->side + ": lhs " + to_string(e->lhs) + ", rhs " +
                                       to_string(e->rhs) + "; expected lhs " + to_string(e->expect_lhs) +
                                       ", rhs " + to_string(e->expect_rhs) + " (p* = " + format(pr.p_star()) + ")");
        // S-side claim for labels m = -label: m < 0 -> rhs zero, m >= 0 -> lhs pole
        const int m = -e->label;
        if (m == 0) {
          scan.mirror.notes.push_back(pair_str({-l, -lp}) + " " + e->side + ": m = 0 expects an lhs pole, found lhs " +
                                      to_string(e->lhs) + ", rhs " + to_string(e->rhs) + " (not asserted)");
        } else {
          bool ok = m < 0 ? e->rhs == Singularity::Zero && e->lhs == Singularity::Regular
                          : e->lhs == Singularity::Pole && e->rhs == Singularity::Regular;
          scan.mirror.add(pt, ok ? 0.0 : 1.0);
        }
      }
      scan.entries.push_back(a);
      scan.entries.push_back(b);
    }
  scan.locus.finalize();
  scan.pattern.finalize();
  scan.mirror.finalize();
  return scan;
}

nlohmann::json to_json(const SingularityScan& scan) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : scan.entries)
    entries.push_back({{"surface", {e.surface.ell, e.surface.ell_prime}},
                       {"side", e.side},
                       {"label", e.label},
                       {"x", to_json(e.x)},
                       {"order_lhs", e.order_lhs},
                       {"order_rhs", e.order_rhs},
                       {"lhs", to_string(e.lhs)},
                       {"rhs", to_string(e.rhs)},
                       {"expect_lhs", to_string(e.expect_lhs)},
                       {"expect_rhs", to_string(e.expect_rhs)},
                       {"matches", e.matches}});
  nlohmann::json skipped = nlohmann::json::array();
  for (auto l : scan.skipped) skipped.push_back({l.ell, l.ell_prime});
  return {{"entries", entries},
          {"skipped", skipped},
          {"locus", to_json(scan.locus)},
          {"pattern", to_json(scan.pattern)},
          {"mirror", to_json(scan.mirror)}};
}

}  // namespace elliptica

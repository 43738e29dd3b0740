#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "elliptica/exchange.hpp"
#include "elliptica/params.hpp"
#include "elliptica/report.hpp"

namespace elliptica {

enum class CoeffFamily { Alpha, Beta };

struct CoeffSelector {
  CoeffFamily family = CoeffFamily::Alpha;
  int sign = +1;
  bool starred = false;
  bool reduced = false;  // drop the xi(w^2)^{-1} factor
};

// alpha^{+-}(w) = (+-p^{1/2} q w; p)/(+-p^{1/2} q^{-1} w; p), with p^{1/2} = -s
// beta^{+-}(w)  = (-+q w; p)/(-+p q^{-1} w; p)
// each times xi(w^2; p, q^4)^{-1} unless reduced; starred uses (p*, s*)
cplx coeff(const CoeffSelector& sel, cplx w, const EllipticParams& params, const TruncationPolicy& policy = {});

// rho(a +- d) = z^{-1} alpha^{+-}(1/z)/alpha^{+-}(z), rho(b +- c) = beta^{+-}(1/z)/beta^{+-}(z),
// all four taken literally, plus the b - c identity with its overall sign flipped
std::vector<VerificationReport> verify_rho_identities(std::span<const cplx> zs, const EllipticParams& params,
                                                      double tol, const TruncationPolicy& policy = {});

enum class Singularity { Zero, Pole, Regular };
const char* to_string(Singularity s);

// log10(m(delta)/m(delta/10)) with m the mean |f| over x(1 + d e^{i theta}), four angles:
// about +1 at a simple zero, -1 at a simple pole, 0 where f is regular and nonzero
double singularity_order(const std::function<cplx(cplx)>& f, cplx x, double delta = 1e-3);
Singularity classify_order(double order);

struct LocusEntry {
  LabelPair surface;
  std::string side;  // "phi" (label l at x = s^{-l}) or "psi" (label l' at x = q^2 s*^{-l'})
  int label = 0;
  cplx x;
  double order_lhs = 0.0, order_rhs = 0.0;
  Singularity lhs = Singularity::Regular, rhs = Singularity::Regular;
  Singularity expect_lhs = Singularity::Regular, expect_rhs = Singularity::Regular;
  bool matches = false;
};

struct SingularityScan {
  std::vector<LocusEntry> entries;
  std::vector<LabelPair> skipped;  // no c = 1 surface with |p|, |p*| < 1
  VerificationReport locus;        // |x_T - x_S| / |x_T| per surface
  VerificationReport pattern;      // 1 per entry contradicting the T-side zero/pole claim, else 0
  VerificationReport mirror;       // S-side claim read through (l, l') -> (-l, -l'), l = 0 excluded
};

// every (l, l') with l != l' in [lo, hi]^2 that has a c = 1, N = 2 surface; Phi side in
// reduced alpha/beta, Psi side with the rational prefactors of the splitting relations
SingularityScan singularity_scan(int lo, int hi, cplx q, const TruncationPolicy& policy = {});

nlohmann::json to_json(const SingularityScan& scan);

}  // namespace elliptica

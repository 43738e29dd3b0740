#include "elliptica/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "elliptica/classical.hpp"
#include "elliptica/errors.hpp"
#include "elliptica/exchange.hpp"
#include "elliptica/rhsplit.hpp"
#include "elliptica/rmatrix_gl2.hpp"
#include "elliptica/rmatrix_glN.hpp"
#include "elliptica/sampling.hpp"
#include "elliptica/surfaces.hpp"
#include "elliptica/theta_checks.hpp"
#include "elliptica/vertexcoeffs.hpp"

namespace elliptica::cli {

using nlohmann::json;

namespace {

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<Rational> parse_rational(std::string_view s) {
  auto slash = s.find('/');
  auto to_ll = [](std::string_view t) -> std::optional<long long> {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
    return v;
  };
  if (slash == std::string_view::npos) {
    if (auto v = to_ll(s)) return Rational(*v);
    return std::nullopt;
  }
  auto a = to_ll(s.substr(0, slash)), b = to_ll(s.substr(slash + 1));
  if (!a || !b || *b == 0) return std::nullopt;
  return Rational(*a, *b);
}

std::string rat_str(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

std::optional<cplx> parse_complex(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i' && s.back() != 'j') {
    auto r = parse_real(s);
    return r ? std::optional<cplx>(cplx(*r, 0.0)) : std::nullopt;
  }
  std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not a leading sign or an exponent sign
  size_t cut = std::string_view::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  std::string_view re_part = cut == std::string_view::npos ? std::string_view{} : body.substr(0, cut);
  std::string_view im_part = cut == std::string_view::npos ? body : body.substr(cut);
  double im;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    auto v = parse_real(im_part);
    if (!v) return std::nullopt;
    im = *v;
  }
  double re = 0.0;
  if (!re_part.empty()) {
    auto v = parse_real(re_part);
    if (!v) return std::nullopt;
    re = *v;
  }
  return cplx(re, im);
}

namespace {

struct Common {
  std::uint64_t seed = 7;
  int samples = 20;
  std::optional<double> tol;
  std::string out;
  std::string csv;
  std::optional<int> max_terms;
  std::optional<double> term_tol;
  std::optional<double> pole_tol;

  TruncationPolicy policy() const {
    TruncationPolicy p = TruncationPolicy::from_env();
    if (max_terms) p.max_terms = *max_terms;
    if (term_tol) p.term_tol = *term_tol;
    if (pole_tol) p.pole_tol = *pole_tol;
    p.validate();
    return p;
  }
  double tolerance(double dflt) const { return tol.value_or(dflt); }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "random seed")->capture_default_str();
  app->add_option("--samples", c.samples, "samples per check")->capture_default_str()->check(CLI::Range(1, 100000));
  app->add_option("--tol", c.tol, "override the check tolerance")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "write the JSON report here instead of stdout");
  app->add_option("--csv", c.csv, "also dump sample values as CSV");
  app->add_option("--max-terms", c.max_terms, "truncation ceiling")->check(CLI::Range(1, 100000000));
  app->add_option("--term-tol", c.term_tol, "truncation tolerance")->check(CLI::PositiveNumber);
  app->add_option("--pole-tol", c.pole_tol, "pole proximity threshold")->check(CLI::PositiveNumber);
}

CLI::Option* add_complex(CLI::App* app, const std::string& name, cplx& target, const std::string& desc) {
  auto* opt = app->add_option_function<std::string>(
      name,
      [&target, name](const std::string& s) {
        auto v = parse_complex(s);
        if (!v) throw CLI::ValidationError(name, "not a complex literal: " + s);
        target = *v;
      },
      desc);
  std::ostringstream d;
  d << target.real() << std::showpos << target.imag() << "i";
  opt->default_str(d.str());
  return opt;
}

CLI::Option* add_rational(CLI::App* app, const std::string& name, Rational& target, const std::string& desc) {
  auto* opt = app->add_option_function<std::string>(
      name,
      [&target, name](const std::string& s) {
        auto v = parse_rational(s);
        if (!v) throw CLI::ValidationError(name, "not a rational: " + s);
        target = *v;
      },
      desc);
  opt->default_str(rat_str(target));
  return opt;
}

json config_of(const CLI::App* app) {
  json cfg = json::object();
  for (const CLI::Option* o : app->get_options()) {
    if (o == app->get_help_ptr() || o == app->get_help_all_ptr()) continue;
    std::string name = o->get_name(false, true);
    if (name.empty()) continue;
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    if (o->get_expected_min() == 0) {
      cfg[name] = o->count() > 0;
    } else if (o->count() > 0) {
      const auto& r = o->results();
      cfg[name] = r.size() == 1 ? json(r.front()) : json(r);
    } else if (!o->get_default_str().empty()) {
      cfg[name] = o->get_default_str();
    }
  }
  return cfg;
}

struct Outcome {
  json body = json::object();
  std::vector<VerificationReport> reports;
  bool ok = true;  // non-report failures (surface --check)
};

void write_csv(const std::string& path, const std::vector<VerificationReport>& reports) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::DomainError, "cannot open CSV path " + path);
  f.precision(17);
  f << "check,index,key,re,im,residual\n";
  for (const auto& r : reports)
    for (size_t i = 0; i < r.samples.size(); ++i)
      for (const auto& [k, v] : r.samples[i].values)
        f << r.check_name << "," << i << "," << k << "," << v.real() << "," << v.imag() << "," << r.residuals[i]
          << "\n";
}

// ---- subcommands ---------------------------------------------------------

struct ThetaOpts {
  cplx z{0.4, 0.1}, p{0.2, 0.0};
  std::vector<int> ns{2, 3, 4};
  int char_samples = 5;
};

Outcome do_theta(const ThetaOpts& o, const Common& c) {
  auto pol = c.policy();
  Outcome r;
  r.body["value"] = {{"theta_p(z,p)", to_json(theta_p(o.z, o.p, pol))}};
  for (auto& rep : verify_theta_p(c.samples, c.seed, c.tolerance(1e-10), pol)) r.reports.push_back(rep);
  for (auto& rep : verify_theta_characteristics(o.ns, o.char_samples, c.seed, c.tolerance(1e-10), pol))
    r.reports.push_back(rep);
  return r;
}

struct RmatOpts {
  int n = 2;
  std::string check = "all";
  cplx q{0.6, 0.0}, p{0.25, 0.0};
  cplx xi{0.13, 0.07}, mu{0.15, 0.08}, tau{0.05, 0.35};
  std::string nome = "p";
  std::string root = "character";
};

Outcome do_rmatrix(const RmatOpts& o, const Common& c) {
  auto pol = c.policy();
  Outcome r;
  if (o.n == 2 && o.check != "belavin") {
    EllipticParams pr = EllipticParams::from_q_p_c(o.q, o.p, 0.0, 2);
    pr.c.reset();
    const double tol = c.tolerance(1e-8);
    auto nome = o.nome == "q" ? NomeConvention::LiteralQ : NomeConvention::EllipticP;
    static const std::vector<std::string> prop1{"ybe", "unitarity", "crossing", "antisymmetry"};
    if (o.check == "all" || o.check == "w-properties" ||
        std::find(prop1.begin(), prop1.end(), o.check) != prop1.end()) {
      for (auto& rep : verify_gl2(pr, c.samples, c.seed, tol, pol))
        if (o.check == "all" || o.check == "w-properties" || rep.check_name == "gl2." + o.check) r.reports.push_back(rep);
    }
    if (o.check == "all" || o.check == "r")
      for (auto& rep : verify_r_identities(pr, c.samples, c.seed, tol, pol, nome)) r.reports.push_back(rep);
    r.body["value"] = {{"W(0.7+0.2i)", json::array()}};
    ComplexMatrix w = w_matrix(cplx(0.7, 0.2), pr, pol);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.body["value"]["W(0.7+0.2i)"].push_back(to_json(w(i, j)));
    return r;
  }
  XiMuTauPoint pt{o.xi, o.mu, o.tau};
  if (o.n == 2) {
    r.reports.push_back(check_n2_proportionality(pt, c.samples, c.seed, c.tolerance(1e-8), pol));
    return r;
  }
  auto root = o.root == "principal" ? SqrtGRoot::Principal : SqrtGRoot::Character;
  for (auto& rep : verify_glN(pt, o.n, c.samples, c.seed, c.tolerance(1e-7), pol, root)) r.reports.push_back(rep);
  return r;
}

struct ExchOpts {
  cplx q{0.55, 0.05};
  std::optional<int> ell, ell_prime;
  cplx z{0.8, 0.0};
};

Outcome do_exchange(const ExchOpts& o, const Common& c) {
  auto pol = c.policy();
  Outcome r;
  EllipticParams pr = case_study_params(o.q);
  for (auto& rep : verify_F_identities(pr, c.samples, c.seed, c.tolerance(1e-9), pol)) r.reports.push_back(rep);
  if (o.ell && o.ell_prime) {
    LabelPair lab{*o.ell, *o.ell_prime};
    r.body["value"] = {{"f_exchange", to_json(f_exchange(lab, o.z, pr, pol))},
                       {"F", to_json(F_func(lab.ell, o.z, pr, false, pol))},
                       {"F*", to_json(F_func(lab.ell_prime, o.z, pr, true, pol))},
                       {"big_F", to_json(big_F(lab, lab, o.z, pr, pol))}};
  }
  return r;
}

struct SurfOpts {
  bool solve = false, check = false, enumerate = false;
  int n = 2;
  Rational c{1};
  std::optional<int> ell, ell_prime;
  std::optional<std::string> exponent;
  cplx q{0.55, 0.05};
  std::optional<std::string> p;  // as exponent "3/2" meaning p = q^{2a}, or omitted for the case study
  int range = 5;
};

json solution_json(const ExponentSolution& s, cplx q) {
  json j = {{"ell", s.labels.ell},
            {"ell_prime", s.labels.ell_prime},
            {"N", s.n},
            {"c", rat_str(s.c)},
            {"a", rat_str(s.a)},
            {"relation", "p^" + std::to_string(s.r) + " = q^" + std::to_string(s.s)},
            {"sigma", s.sigma},
            {"sigma_star", s.sigma_star},
            {"derivation", s.derivation}};
  try {
    auto pr = params_from_solution(q, s);
    j["residual"] = surface_residual(s.labels, pr, SurfaceSide::T);
  } catch (const Error& e) {
    j["residual_error"] = e.what();
  }
  return j;
}

Outcome do_surface(const SurfOpts& o, const Common& c) {
  Outcome r;
  const int modes = int(o.solve) + int(o.check) + int(o.enumerate);
  if (modes != 1) throw CLI::ValidationError("surface", "exactly one of --solve, --check, --enumerate");
  const double tol = c.tolerance(1e-10);
  if (o.solve) {
    if (!o.ell) throw CLI::ValidationError("--ell", "--solve needs --ell");
    json sols = json::array();
    if (o.ell_prime) {
      try {
        sols.push_back(solution_json(solve_exponent({*o.ell, *o.ell_prime}, o.c, o.n), o.q));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Degenerate) throw;
        r.body["degenerate"] = {{"critical_c", rat_str(critical_c(*o.ell, o.n))}, {"message", e.what()}};
      }
    } else if (o.exponent) {
      auto a = parse_rational(*o.exponent);
      if (!a) throw CLI::ValidationError("--exponent", "not a rational");
      sols.push_back(solution_json(solve_label_prime(*o.ell, *a, o.c, o.n), o.q));
    } else {
      r.body["note"] = "one equation, two unknowns: listing every l' in range with a valid exponent";
      for (int lp = -o.range; lp <= o.range + 3 * std::abs(*o.ell) + 2 * o.n; ++lp) {
        if (lp == *o.ell) continue;
        try {
          sols.push_back(solution_json(solve_exponent({*o.ell, lp}, o.c, o.n), o.q));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::Inconsistent) throw;
        }
      }
    }
    r.body["solutions"] = sols;
    return r;
  }
  // params: the c = 1, p = q^3 case study unless --p gives the exponent a (p = q^{2a})
  EllipticParams pr;
  if (o.p) {
    auto a = parse_rational(*o.p);
    if (!a) throw CLI::ValidationError("--p", "surface --p takes the exponent a of p = q^{2a}");
    EllipticParams t;
    t.q = o.q;
    const double ad = double(a->numerator()) / double(a->denominator());
    const double cd = double(o.c.numerator()) / double(o.c.denominator());
    t.s = -qpow(o.q, ad);
    t.s_star = -qpow(o.q, ad - cd);
    t.c = cd;
    t.n = o.n;
    t.validate();
    pr = t;
  } else {
    pr = case_study_params(o.q);
    pr.n = o.n;
  }
  if (o.check) {
    if (!o.ell || !o.ell_prime) throw CLI::ValidationError("--check", "needs --ell and --ell-prime");
    VerificationReport rep("surface.check", tol);
    LabelPair lab{*o.ell, *o.ell_prime};
    double res = surface_residual(lab, pr, SurfaceSide::T);
    rep.add(SamplePoint{{{"l", cplx(lab.ell)}, {"l'", cplx(lab.ell_prime)}, {"gamma", ipow(pr.s, -lab.ell)}}}, res);
    r.reports.push_back(rep.finalize());
    return r;
  }
  json list = json::array();
  for (const auto& sp : enumerate_surfaces(pr, o.range, tol))
    list.push_back({{"ell", sp.labels.ell},
                    {"ell_prime", sp.labels.ell_prime},
                    {"side", sp.side == SurfaceSide::T ? "T" : "S"},
                    {"gamma", to_json(sp.gamma)},
                    {"residual", sp.residual}});
  r.body["surfaces"] = list;
  return r;
}

struct TableOpts {
  cplx q{0.55, 0.05};
  int z_samples = 10;
};

Outcome do_table(const TableOpts& o, const Common& c) {
  auto pol = c.policy();
  Outcome r;
  for (auto& rep : verify_tableau(o.q, o.z_samples, c.seed, c.tolerance(1e-8), pol)) r.reports.push_back(rep);
  r.reports.push_back(verify_congruency(o.q, o.z_samples, c.seed, c.tolerance(1e-9), pol));
  std::vector<LabelPair> surfs;
  for (const auto& k : tableau_classes()) surfs.push_back(k.representative);
  surfs.push_back({5, 19});
  surfs.push_back({-3, -5});
  r.reports.push_back(verify_compatibility(case_study_params(o.q), surfs, 3, c.seed, c.tolerance(1e-10), pol));
  return r;
}

struct SplitOpts {
  std::optional<int> ell, ell_prime;
  int n = 2;
  Rational c{1};
  std::optional<cplx> q;
};

Outcome do_rhsplit(const SplitOpts& o, const Common& c) {
  auto pol = c.policy();
  Outcome r;
  std::vector<std::pair<LabelPair, int>> cases;
  if (o.ell && o.ell_prime)
    cases.push_back({{*o.ell, *o.ell_prime}, o.n});
  else
    cases = {{{1, 7}, 2}, {{2, 4}, 3}};
  std::mt19937_64 rng(c.seed);
  for (auto [lab, n] : cases) {
    cplx q = o.q.value_or(n == 2 ? cplx(0.55, 0.05) : cplx(0.8, 0.05));
    auto sol = solve_exponent(lab, o.c, n);
    SplitFactor sf{lab, n, params_from_solution(q, sol)};
    std::vector<cplx> zs;
    for (int i = 0; i < c.samples; ++i) zs.push_back(sample_annulus(rng, 0.8, 1.2));
    auto rep = verify_split(sf, zs, c.tolerance(1e-8), pol);
    rep.seed = c.seed;
    rep.extra["relation"] = "p^" + std::to_string(sol.r) + " = q^" + std::to_string(sol.s);
    r.reports.push_back(rep);
  }
  return r;
}

struct ClassOpts {
  int ell = 3, ell_prime = 1, k = 1;
  cplx q{0.5, 0.0};
  std::optional<cplx> z;
  cplx foot_q{0.6, 0.1}, foot_s{-0.3, 0.1};
};

Outcome do_classical(const ClassOpts& o, const Common& c) {
  auto pol = c.policy();
  Outcome r;
  std::mt19937_64 rng(c.seed);
  std::vector<cplx> zs{o.z.value_or(cplx(0.7, 0.0))};
  while (static_cast<int>(zs.size()) < std::max(c.samples, 10)) zs.push_back(sample_annulus(rng, 0.6, 0.95));
  LimitConfig cfg{{o.ell, o.ell_prime}, o.k, {1e-2, 1e-3, 1e-4}};
  for (auto& rep : semiclassical_limit(cfg, zs, o.q, 2, c.tolerance(1e-4), pol)) r.reports.push_back(rep);
  std::vector<cplx> fz(zs.begin(), zs.begin() + std::min<size_t>(5, zs.size()));
  for (int l : {2, 1, -1}) {
    auto rep = verify_critical_c_degeneration(l, o.foot_q, o.foot_s, fz, 1e-9, pol);
    if (l != 2) rep.notes.push_back("companion case |l| = 1");
    r.reports.push_back(rep);
  }
  return r;
}

struct VoOpts {
  cplx q{0.55, 0.0}, p{0.2, 0.0};
  int range = 4;
  cplx scan_q{0.5, 0.0};
};

Outcome do_vo(const VoOpts& o, const Common& c) {
  auto pol = c.policy();
  Outcome r;
  EllipticParams pr = EllipticParams::from_q_p_c(o.q, o.p, 0.0, 2);
  pr.c.reset();
  std::mt19937_64 rng(c.seed);
  std::vector<cplx> zs{cplx(0.75, 0.1), cplx(1.0, 0.0)};
  while (static_cast<int>(zs.size()) < c.samples) zs.push_back(sample_annulus(rng, 0.5, 2.0));
  for (auto& rep : verify_rho_identities(zs, pr, c.tolerance(1e-8), pol)) {
    rep.seed = c.seed;
    r.reports.push_back(rep);
  }
  auto scan = singularity_scan(-o.range, o.range, o.scan_q, pol);
  r.reports.push_back(scan.locus);
  r.reports.push_back(scan.pattern);
  r.reports.push_back(scan.mirror);
  r.body["singularity_scan"] = to_json(scan)["entries"];
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"elliptica: numerical checks for elliptic R-matrices and exchange functions", "elliptica"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  ThetaOpts th;
  RmatOpts rm;
  ExchOpts ex;
  SurfOpts su;
  TableOpts ta;
  SplitOpts sp;
  ClassOpts cl;
  VoOpts vo;

  auto* s_theta = app.add_subcommand("theta", "theta functions with characteristics");
  add_complex(s_theta, "--z", th.z, "argument");
  add_complex(s_theta, "--p", th.p, "nome");
  s_theta->add_option("--n", th.ns, "N values for characteristic checks")->capture_default_str()->check(CLI::Range(2, 8));
  s_theta->add_option("--char-samples", th.char_samples, "samples per characteristic")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));

  auto* s_rm = app.add_subcommand("rmatrix", "eight-vertex and Belavin R-matrix checks");
  s_rm->add_option("--n", rm.n, "N")->capture_default_str()->check(CLI::Range(2, 6));
  s_rm->add_option("--check", rm.check, "all|w-properties|ybe|unitarity|crossing|antisymmetry|r|belavin")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "w-properties", "ybe", "unitarity", "crossing", "antisymmetry", "r", "belavin"}));
  add_complex(s_rm, "--q", rm.q, "q (N = 2)");
  add_complex(s_rm, "--p", rm.p, "p (N = 2)");
  add_complex(s_rm, "--xi", rm.xi, "base xi (Belavin)");
  add_complex(s_rm, "--mu", rm.mu, "mu, q = e^{i pi mu} (Belavin)");
  add_complex(s_rm, "--tau", rm.tau, "tau, p = e^{2 i pi tau} (Belavin)");
  s_rm->add_option("--nome", rm.nome, "p or q (literal nome reading)")->capture_default_str()->check(CLI::IsMember({"p", "q"}));
  s_rm->add_option("--root", rm.root, "g^{1/2} root")->capture_default_str()->check(CLI::IsMember({"character", "principal"}));

  auto* s_ex = app.add_subcommand("exchange", "F(l, z) identities on the c = 1, p = q^3 point");
  add_complex(s_ex, "--q", ex.q, "q");
  s_ex->add_option("--ell", ex.ell, "l for value output");
  s_ex->add_option("--ell-prime", ex.ell_prime, "l' for value output");
  add_complex(s_ex, "--z", ex.z, "z for value output");

  auto* s_su = app.add_subcommand("surface", "surface conditions: solve, check, enumerate");
  s_su->add_flag("--solve", su.solve, "solve for the exponent or l'");
  s_su->add_flag("--check", su.check, "check a label pair at the parameter point");
  s_su->add_flag("--enumerate", su.enumerate, "list surfaces holding at the parameter point");
  s_su->add_option("--n", su.n, "N")->capture_default_str()->check(CLI::Range(2, 8));
  add_rational(s_su, "--c", su.c, "central charge (rational)");
  s_su->add_option("--ell", su.ell, "l");
  s_su->add_option("--ell-prime", su.ell_prime, "l'");
  s_su->add_option("--exponent", su.exponent, "a with p = q^{2a} (solve for l')");
  add_complex(s_su, "--q", su.q, "q for residual checks");
  s_su->add_option("--p", su.p, "exponent a with p = q^{2a} for --check/--enumerate");
  s_su->add_option("--range", su.range, "label range")->capture_default_str()->check(CLI::Range(0, 50));

  auto* s_ta = app.add_subcommand("table", "c = 1, p = q^3 structure-function table");
  add_complex(s_ta, "--q", ta.q, "q");
  s_ta->add_option("--z-samples", ta.z_samples, "z samples per entry")->capture_default_str()->check(CLI::Range(1, 10000));

  auto* s_sp = app.add_subcommand("rhsplit", "Riemann-Hilbert splitting factor");
  s_sp->add_option("--ell", sp.ell, "l");
  s_sp->add_option("--ell-prime", sp.ell_prime, "l'");
  s_sp->add_option("--n", sp.n, "N")->capture_default_str()->check(CLI::Range(2, 8));
  add_rational(s_sp, "--c", sp.c, "central charge (rational)");
  s_sp->add_option_function<std::string>("--q", [&](const std::string& s) {
    auto v = parse_complex(s);
    if (!v) throw CLI::ValidationError("--q", "not a complex literal: " + s);
    sp.q = *v;
  }, "q");

  auto* s_cl = app.add_subcommand("classical", "semiclassical limit against h");
  s_cl->add_option("--ell", cl.ell, "l")->capture_default_str();
  s_cl->add_option("--ell-prime", cl.ell_prime, "l'")->capture_default_str();
  s_cl->add_option("--k", cl.k, "k")->capture_default_str()->check(CLI::Range(1, 20));
  add_complex(s_cl, "--q", cl.q, "q");
  s_cl->add_option_function<std::string>("--z", [&](const std::string& s) {
    auto v = parse_complex(s);
    if (!v) throw CLI::ValidationError("--z", "not a complex literal: " + s);
    cl.z = *v;
  }, "first sample point");

  auto* s_vo = app.add_subcommand("vo", "vertex-operator coefficient identities and singularity scan");
  add_complex(s_vo, "--q", vo.q, "q for the rho identities");
  add_complex(s_vo, "--p", vo.p, "p for the rho identities");
  s_vo->add_option("--range", vo.range, "label range of the scan")->capture_default_str()->check(CLI::Range(1, 8));
  add_complex(s_vo, "--scan-q", vo.scan_q, "q of the scan");

  for (auto* s : {s_theta, s_rm, s_ex, s_su, s_ta, s_sp, s_cl, s_vo}) add_common(s, common);

  std::vector<const char*> argv{"elliptica"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Outcome res;
  try {
    const std::string name = sub->get_name();
    if (name == "theta") res = do_theta(th, common);
    else if (name == "rmatrix") res = do_rmatrix(rm, common);
    else if (name == "exchange") res = do_exchange(ex, common);
    else if (name == "surface") res = do_surface(su, common);
    else if (name == "table") res = do_table(ta, common);
    else if (name == "rhsplit") res = do_rhsplit(sp, common);
    else if (name == "classical") res = do_classical(cl, common);
    else res = do_vo(vo, common);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  json reports = json::array();
  for (const auto& r : res.reports) reports.push_back(to_json(r));
  const bool passed = res.ok && all_passed(res.reports);
  json doc = {{"schema", 1},
              {"subcommand", sub->get_name()},
              {"config", config_of(sub)},
              {"seed", common.seed},
              {"reports", reports},
              {"passed", passed}};
  for (auto& [k, v] : res.body.items()) doc[k] = v;

  try {
    if (!common.csv.empty()) write_csv(common.csv, res.reports);
    if (common.out.empty()) {
      out << doc.dump(2) << "\n";
    } else {
      std::ofstream f(common.out);
      if (!f) throw Error(ErrorKind::DomainError, "cannot open output path " + common.out);
      f << doc.dump(2) << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return passed ? 0 : 1;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace elliptica::cli

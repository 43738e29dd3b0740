#include <doctest.h>

#include "elliptica/errors.hpp"
#include "elliptica/exchange.hpp"
#include "elliptica/rmatrix_gl2.hpp"
#include "elliptica/surfaces.hpp"
#include "oracles.hpp"

using namespace elliptica;

namespace {

// tau~ for N = 2 rebuilt from the triple-product series
cplx tt(cplx z, cplx q) {
  const cplx q2 = q * q, q4 = q2 * q2, z2 = z * z;
  cplx t = z / std::sqrt(q) * oracle::theta(q2 * z2, q4) / oracle::theta(z2, q4);
  return -t * t;
}

// the c = 1, p = q^3 table re-encoded: T = Theta_{q^4}, arguments in z^2
cplx table_entry(int r, int c, cplx z, cplx q) {
  const cplx q2 = q * q, q4 = q2 * q2, u = z * z;
  auto T = [&](cplx x) { return oracle::theta(x, q4); };
  auto pw = [](cplx x, int k) { return std::pow(x, k); };
  const int key = 10 * r + c;
  switch (key) {
    case 11:
    case 33: return q2 * pw(T(q2 * q * u), 2) * pw(T(u / q), 2) / pw(T(q * u), 4);
    case 12:
    case 23: return q2 * pw(T(q2 * u), 4) * pw(T(u / q), 4) / (pw(T(u), 4) * pw(T(q * u), 4));
    case 13: return q2 * pw(T(q2 * u), 2) * pw(T(u / q2), 2) / pw(T(u), 4);
    case 21:
    case 32: return q2 * pw(T(u), 4) * pw(T(q2 * q * u), 4) / (pw(T(q2 * u), 4) * pw(T(q * u), 4));
    case 22: return q4 * pw(T(q2 * q * u), 4) * pw(T(u / q), 4) / pw(T(q * u), 8);
    case 31: return pw(T(u), 4) / (q2 * pw(T(q2 * u), 2) * pw(T(u / q2), 2));
  }
  return 0.0;
}

}  // namespace

TEST_CASE("F(l, z) is the product of shifted tau~ factors") {
  const auto pr = case_study_params(cplx(0.55, 0.05));
  const cplx z(0.8, 0.3), s = pr.s, q = pr.q;
  CHECK(F_func(0, z, pr, false) == cplx(1.0));
  cplx f3 = tt(z / s, q) * tt(z / (s * s), q) * tt(z / (s * s * s), q);
  CHECK(oracle::rel(F_func(3, z, pr, false), f3) < 1e-11);
  // F(-1, z) = 1 / F(1, s z) = 1 / tau~(z)
  CHECK(oracle::rel(F_func(-1, z, pr, false), 1.0 / tt(z, q)) < 1e-11);
  const cplx ss = pr.s_star;
  CHECK(oracle::rel(F_func(2, z, pr, true), tt(z / ss, q) * tt(z / (ss * ss), q)) < 1e-11);
}

TEST_CASE("exchange function for (1,7) by hand") {
  const auto pr = case_study_params(cplx(0.55, 0.05));
  const cplx z(0.9, -0.2);
  cplx num = 1.0;
  cplx sk = 1.0;
  for (int j = 1; j <= 7; ++j) {
    sk *= pr.s_star;
    num *= tt(z / sk, pr.q);
  }
  cplx den = tt(z / pr.s, pr.q);
  CHECK(oracle::rel(f_exchange({1, 7}, z, pr), num / den) < 1e-10);
  CHECK_THROWS_AS(f_exchange({1, 6}, z, pr), Error);
}

TEST_CASE("tableau closed forms against an independent encoding") {
  const cplx q(0.55, 0.05);
  for (cplx z : {cplx(0.9, 0.3), cplx(-0.7, 0.6)})
    for (int r = 1; r <= 3; ++r)
      for (int c = 1; c <= 3; ++c) {
        INFO(r, c);
        CHECK(oracle::rel(tableau_value(r, c, z, q), table_entry(r, c, z, q)) < 1e-10);
      }
}

TEST_CASE("tableau classes") {
  const auto& k = tableau_classes();
  CHECK(k[1].representative.ell == 1);
  CHECK(k[1].representative.ell_prime == 7);
  for (const auto& c : k) CHECK(c.representative.ell_prime == 3 * c.representative.ell + 4);
}

TEST_CASE("tableau, congruency and compatibility suites") {
  const cplx q(0.55, 0.05);
  for (const auto& r : verify_tableau(q, 4, 21, 1e-8)) {
    INFO(r.check_name);
    CHECK(r.passed);
  }
  CHECK(verify_congruency(q, 4, 21, 1e-9).passed);
  CHECK(verify_compatibility(case_study_params(q), {{1, 7}, {2, 10}, {-3, -5}}, 2, 3, 1e-10).passed);
}

TEST_CASE("F identities") {
  for (const auto& r : verify_F_identities(case_study_params(cplx(0.55, 0.05)), 6, 4, 1e-9)) {
    INFO(r.check_name);
    CHECK(r.passed);
  }
}

TEST_CASE("structure function of the (0,4) class is identically 1") {
  // gamma = 1 at l = 0, so both ratios cancel
  const auto pr = case_study_params(cplx(0.55, 0.05));
  CHECK(std::abs(big_F({0, 4}, {0, 4}, cplx(0.7, 0.2), pr) - 1.0) < 1e-12);
}

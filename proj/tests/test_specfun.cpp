#include <doctest.h>

#include <cstdlib>

#include "elliptica/errors.hpp"
#include "elliptica/specfun.hpp"
#include "oracles.hpp"

using namespace elliptica;

TEST_CASE("qpoch matches a 60-term product") {
  for (cplx z : {cplx(0.3, 0.2), cplx(-1.7, 0.4), cplx(2.5, -1.0)})
    for (cplx a : {cplx(0.4, 0.1), cplx(-0.5, 0.0), cplx(0.2, -0.45)})
      CHECK(oracle::rel(qpoch(z, {a}), oracle::qpoch1(z, a)) < 1e-13);
}

TEST_CASE("two-base qpoch matches the n_i <= 30 lattice") {
  const cplx a(0.25, 0.05), b(-0.2, 0.15);
  for (cplx z : {cplx(0.6, 0.1), cplx(-2.0, 0.3)})
    CHECK(oracle::rel(qpoch(z, {a, b}), oracle::qpoch_lattice(z, {a, b}, 30)) < 1e-13);
  // small bases, the n_i <= 12 box already exhausts double precision
  const cplx c(0.03, 0.01), d(0.05, 0.0);
  CHECK(oracle::rel(qpoch(cplx(0.9, 0.2), {c, d}), oracle::qpoch_lattice(cplx(0.9, 0.2), {c, d}, 12)) < 1e-14);
}

TEST_CASE("qpoch edge cases") {
  CHECK(qpoch(0.0, {cplx(0.5)}) == cplx(1.0));
  CHECK(std::abs(qpoch(1.0, {cplx(0.5)})) == 0.0);
  CHECK(qpoch(0.7, {}) == cplx(1.0 - 0.7));
  CHECK_THROWS_AS(qpoch(0.2, {cplx(1.0)}), Error);
  try {
    qpoch(0.2, {cplx(0.3, 1.0)});
    FAIL("expected DivergentBase");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivergentBase);
  }
  try {
    qpoch_nonzero(1.0 + 1e-12, {cplx(0.4)});
    FAIL("expected PoleProximity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleProximity);
  }
}

TEST_CASE("truncation policy") {
  TruncationPolicy bad;
  bad.max_terms = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  TruncationPolicy tiny;
  tiny.max_terms = 5;
  try {
    qpoch(0.5, {cplx(0.95)}, tiny);
    FAIL("expected NonConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergence);
  }
  setenv("ELLIPTICA_MAX_TERMS", "7", 1);
  CHECK(TruncationPolicy::from_env().max_terms == 7);
  setenv("ELLIPTICA_MAX_TERMS", "junk", 1);
  CHECK_THROWS_AS(TruncationPolicy::from_env(), Error);
  unsetenv("ELLIPTICA_MAX_TERMS");
  CHECK(TruncationPolicy::from_env().max_terms == TruncationPolicy{}.max_terms);
}

TEST_CASE("theta_p against the triple-product series") {
  for (cplx p : {cplx(0.3, 0.1), cplx(-0.45, 0.2), cplx(0.05, 0.0)})
    for (cplx z : {cplx(0.4, 0.7), cplx(-1.3, 0.2), cplx(2.2, -0.9)})
      CHECK(oracle::rel(theta_p(z, p), oracle::theta(z, p)) < 1e-12);
  CHECK(std::abs(theta_p(1.0, 0.3)) == 0.0);
  CHECK_THROWS_AS(theta_p(0.0, 0.3), Error);
}

TEST_CASE("theta_p functional equations") {
  const cplx p(0.35, -0.1);
  for (cplx z : {cplx(0.5, 0.3), cplx(-1.1, 0.8)}) {
    CHECK(oracle::rel(theta_p(1.0 / z, p), -theta_p(z, p) / z) < 1e-12);
    CHECK(oracle::rel(theta_p(p * z, p), -theta_p(z, p) / z) < 1e-12);
  }
}

TEST_CASE("xi against direct double products") {
  const cplx p(0.2, 0.05), q(0.55, 0.1);
  for (cplx z : {cplx(0.5, 0.2), cplx(-0.9, 0.4)}) CHECK(oracle::rel(xi(z, p, q), oracle::xi(z, p, q)) < 1e-12);
  // xi(1) = (q^2;p,q^4)(pq^2;p,q^4)/((q^4;p,q^4)(p;p,q^4)); z -> 0 gives 1
  CHECK(std::abs(xi(1e-14, p, q) - 1.0) < 1e-12);
}

TEST_CASE("ipow is exact repeated multiplication") {
  const cplx s(-0.3, 0.4);
  CHECK(ipow(s, 0) == cplx(1.0));
  CHECK(std::abs(ipow(s, 3) - s * s * s) < 1e-16);
  CHECK(std::abs(ipow(s, -2) * s * s - 1.0) < 1e-15);
}

TEST_CASE("characteristics") {
  auto ch = RationalCharacteristic::standard(1, 2, 3);
  CHECK(ch.gamma1 == Rational(5, 6));
  CHECK(ch.gamma2 == Rational(7, 6));
  CHECK_NOTHROW(ch.validate());
  RationalCharacteristic bad{Rational(1, 7), Rational(1, 2), 3};
  CHECK_THROWS_AS(bad.validate(), Error);
  // theta[1/2,1/2] is odd, so it vanishes at xi = 0
  const cplx tau(0.1, 0.7);
  CHECK(std::abs(jacobi_theta_series(0.5, 0.5, 0.0, tau)) < 1e-14);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      auto c = RationalCharacteristic::standard(j, k, 3);
      const double g1 = boost::rational_cast<double>(c.gamma1), g2 = boost::rational_cast<double>(c.gamma2);
      const cplx x(0.17, -0.05);
      CHECK(oracle::rel(jacobi_theta_series(g1, g2, x, tau), jacobi_theta_product(g1, g2, x, tau)) < 1e-12);
    }
  CHECK_THROWS_AS(jacobi_theta_series(0.5, 0.5, 0.1, cplx(0.2, -0.1)), Error);
}

#include <doctest.h>

#include "elliptica/classical.hpp"
#include "elliptica/errors.hpp"
#include "oracles.hpp"

using namespace elliptica;

TEST_CASE("h against a 200-term direct sum") {
  CHECK(oracle::rel(h_poisson(0.5, 0.6), oracle::h(0.5, 0.6)) < 1e-12);
  CHECK(oracle::rel(h_poisson(cplx(0.8, 0.3), cplx(0.4, 0.1)), oracle::h(cplx(0.8, 0.3), cplx(0.4, 0.1))) < 1e-12);
}

TEST_CASE("h is odd under x -> 1/x") {
  for (cplx x : {cplx(0.7, 0.1), cplx(-0.3, 0.9), cplx(1.3, -0.2)})
    CHECK(std::abs(h_poisson(1.0 / x, 0.5) + h_poisson(x, 0.5)) < 1e-10 * std::abs(h_poisson(x, 0.5)));
}

TEST_CASE("h pole at x = 1") {
  try {
    h_poisson(1.0 + 1e-12, 0.5);
    FAIL("expected PoleProximity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleProximity);
  }
}

TEST_CASE("limit config validation") {
  LimitConfig bad{{1, 0}, 1, {1e-2, 1e-3, 1e-4}};  // eta = 0
  CHECK_THROWS_AS(bad.validate(), Error);
  LimitConfig up{{3, 1}, 1, {1e-4, 1e-3, 1e-2}};
  CHECK_THROWS_AS(up.validate(), Error);
  CHECK(LimitConfig{{3, 1}}.eta() == 6);
}

TEST_CASE("beta -> 0 limit for labels (3,1)") {
  std::vector<cplx> zs{0.7, cplx(0.65, 0.3), cplx(-0.8, 0.2), cplx(0.1, 0.75), cplx(-0.5, -0.6),
                       cplx(0.9, 0.1), cplx(0.62, -0.2), cplx(-0.3, 0.85), cplx(0.4, -0.7), cplx(-0.72, -0.1)};
  LimitConfig c2{{3, 1}, 2};
  auto even = semiclassical_limit(c2, zs, 0.5, 2, 1e-4);
  CHECK(even[0].passed);                                 // limit_vs_h at k = 2
  CHECK(even[0].extra["orientation_consistent"] == true);
  CHECK(even[2].passed);                                 // k vs k + 2
  CHECK(even[4].passed);                                 // beta = 0
  // odd k lands on -h/3: the limit depends on the parity of k
  cplx d1 = richardson_limit(LimitConfig{{3, 1}, 1}, 1, 0.7, 0.5, 2);
  cplx d2 = richardson_limit(LimitConfig{{3, 1}, 1}, 2, 0.7, 0.5, 2);
  CHECK(std::abs(d1 * 3.0 - d2) < 1e-4 * std::abs(d2));
}

TEST_CASE("critical-c degeneration holds for |l| = 1 only") {
  std::vector<cplx> zs{cplx(0.7, 0.2), cplx(-0.9, 0.4)};
  const cplx q(0.6, 0.1), s(-0.3, 0.1);
  CHECK(verify_critical_c_degeneration(1, q, s, zs, 1e-9).passed);
  CHECK(verify_critical_c_degeneration(-1, q, s, zs, 1e-9).passed);
  CHECK_FALSE(verify_critical_c_degeneration(2, q, s, zs, 1e-9).passed);
}

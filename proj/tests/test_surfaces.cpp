#include <doctest.h>

#include "elliptica/errors.hpp"
#include "elliptica/surfaces.hpp"

using namespace elliptica;

TEST_CASE("solver reproduces l' = 3l + 4 and p = q^3 at N = 2, c = 1") {
  auto s = solve_exponent({1, 7}, Rational(1), 2);
  CHECK(s.a == Rational(3, 2));
  CHECK(s.r == 1);
  CHECK(s.s == 3);
  for (int l = -3; l <= 5; ++l) {
    if (l == -2) continue;  // l' = l there: the degenerate branch
    auto t = solve_label_prime(l, Rational(3, 2), Rational(1), 2);
    CHECK(t.labels.ell_prime == 3 * l + 4);
  }
}

TEST_CASE("N = 3, c = 1, (2,4) gives p = q^7") {
  auto s = solve_exponent({2, 4}, Rational(1), 3);
  CHECK(s.a == Rational(7, 2));
  CHECK(s.r == 1);
  CHECK(s.s == 7);
  auto pr = params_from_solution(cplx(0.8, 0.05), s);
  CHECK(surface_residual({2, 4}, pr, SurfaceSide::T) < 1e-12);
}

TEST_CASE("degenerate and inconsistent cases") {
  try {
    solve_exponent({2, 2}, Rational(1), 2);
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
    CHECK(e.residual() == doctest::Approx(-1.0));
  }
  CHECK(critical_c(2, 2) == Rational(-1));
  CHECK(critical_c(3, 3) == Rational(-1));
  try {
    solve_exponent({3, 1}, Rational(1), 2);  // a = 3/(-2) < 0
    FAIL("expected Inconsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Inconsistent);
  }
  CHECK_THROWS_AS(solve_label_prime(1, Rational(5, 3), Rational(1), 2), Error);  // l' = 11/2
}

TEST_CASE("surface_check carries the residual") {
  auto pr = case_study_params(cplx(0.55, 0.05));
  CHECK(surface_residual({1, 7}, pr, SurfaceSide::T) < 1e-14);
  CHECK(surface_residual({-3, -5}, pr, SurfaceSide::T) < 1e-13);
  try {
    surface_check({1, 6}, pr);
    FAIL("expected SurfaceViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SurfaceViolation);
    CHECK(e.residual() > 0.1);
  }
  // the (0,0) labels need q^N = 1
  CHECK_THROWS_AS(surface_check({0, 0}, pr), Error);
}

TEST_CASE("S side mirrors the T side") {
  auto pr = case_study_params(cplx(0.55, 0.05));
  CHECK(surface_residual({-1, -7}, pr, SurfaceSide::S) < 1e-14);
  CHECK(surface_residual({-1, -7}, pr, SurfaceSide::T) > 1e-3);
}

TEST_CASE("enumeration at the case-study point lists the congruence family") {
  auto pr = case_study_params(cplx(0.55, 0.05));
  auto list = enumerate_surfaces(pr, 7, 1e-10);
  bool found17 = false;
  for (const auto& sp : list) {
    if (sp.side == SurfaceSide::T) CHECK(sp.labels.ell_prime == 3 * sp.labels.ell + 4);
    found17 |= sp.side == SurfaceSide::T && sp.labels.ell == 1 && sp.labels.ell_prime == 7;
  }
  CHECK(found17);
}

TEST_CASE("real-exponent parametrization stays on the surface") {
  auto pr = params_for_exponent(cplx(0.5, 0.0), 1.0 - 1e-3 / 6, {3, 1}, 2);
  CHECK(surface_residual({3, 1}, pr, SurfaceSide::T) < 1e-12);
  CHECK(pr.c.has_value());
}

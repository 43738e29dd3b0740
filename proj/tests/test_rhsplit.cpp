#include <doctest.h>

#include "elliptica/errors.hpp"
#include "elliptica/rhsplit.hpp"
#include "elliptica/surfaces.hpp"
#include "oracles.hpp"

using namespace elliptica;

namespace {
SplitFactor case_17() {
  auto sol = solve_exponent({1, 7}, Rational(1), 2);
  return {{1, 7}, 2, params_from_solution(cplx(0.55, 0.05), sol)};
}
}  // namespace

TEST_CASE("phi at x = 0 is 1") {
  CHECK(std::abs(phi(0.0, case_17()) - 1.0) < 1e-14);
}

TEST_CASE("phi is even in x") {
  const auto sf = case_17();
  for (cplx x : {cplx(0.6, 0.2), cplx(0.9, -0.4)}) CHECK(oracle::rel(phi(-x, sf), phi(x, sf)) < 1e-12);
}

TEST_CASE("splitting factor reproduces F at (1,7) and (2,4)") {
  std::vector<cplx> zs{cplx(0.9, 0.3), cplx(-1.05, 0.2), cplx(0.1, 1.1), cplx(0.85, -0.4)};
  auto r = verify_split(case_17(), zs, 1e-8);
  CHECK(r.passed);
  auto sol = solve_exponent({2, 4}, Rational(1), 3);
  SplitFactor sf3{{2, 4}, 3, params_from_solution(cplx(0.8, 0.05), sol)};
  CHECK(verify_split(sf3, zs, 1e-8).passed);
}

TEST_CASE("split factor validation") {
  auto sf = case_17();
  sf.labels = {1, 6};
  CHECK_THROWS_AS(sf.validate(), Error);
  auto sf2 = case_17();
  sf2.n = 3;
  CHECK_THROWS_AS(sf2.validate(), Error);
}

#include "doctest.h"
#include "scp/drinfeld.hpp"
#include "scp/rotation.hpp"

using namespace scp;

TEST_CASE("Drinfeld coefficients") {
  CHECK(compute_P(3, 3) == std::vector<std::int64_t>{1, 7, 1});
  CHECK(compute_P(4, 4) == std::vector<std::int64_t>{1, 31, 31, 1});
  CHECK(compute_P(2, 4) == std::vector<std::int64_t>{1, 6, 1});
  const auto p36 = compute_P(3, 6);
  CHECK(p36 == std::vector<std::int64_t>{1, 50, 141, 50, 1});
  CHECK(compute_P(4, 8)[3] == 8092);
}

TEST_CASE("spin patterns") {
  CHECK(pattern_from_index(0, 2) == SpinPattern{1, 1});
  CHECK(pattern_from_index(2, 2) == SpinPattern{-1, 1});
  CHECK(pattern_from_index(3, 2) == SpinPattern{-1, -1});
  for (int i = 0; i < 8; ++i) CHECK(pattern_index(pattern_from_index(i, 3)) == i);
}

TEST_CASE("Drinfeld data at N = 3, L = 3") {
  ModelConfig cfg;
  const DrinfeldData dd = build_drinfeld(cfg);
  REQUIRE(dd.r == 2);
  CHECK(dd.roots[0].real() == doctest::Approx(-6.854101966249685));
  CHECK(dd.roots[1].real() == doctest::Approx(-0.1458980337503155));
  CHECK(dd.pair == std::vector<int>{1, 0});
  CHECK(dd.k.real() == doctest::Approx(0.9539392014169456));
  CHECK(std::cosh(2.0 * dd.theta[1]).real() == doctest::Approx(1.935816727562758).epsilon(1e-12));
  CHECK(dd.theta[1].real() == doctest::Approx(0.6395411921413444).epsilon(1e-12));
  CHECK(dd.d[1].real() == doctest::Approx(7.0));
  CHECK(dd.d[2].real() == doctest::Approx(-47.0));
  const Epsilon e = epsilon(1, dd);
  CHECK(std::abs(e.bar - cplx(0, 0.6514650252828493)) < 1e-12);

  const DrinfeldChecks c = drinfeld_checks(dd);
  CHECK(c.symmetry == 0.0);
  CHECK(c.pairing < 1e-12);
  CHECK(c.product < 1e-12);
  CHECK(c.newton < 1e-12);
  CHECK(c.s_series < 1e-12);
  CHECK(c.rho < 1e-12);
}

TEST_CASE("self-paired root at odd r") {
  ModelConfig cfg;
  cfg.N = 4;
  cfg.L = 4;
  const DrinfeldData dd = build_drinfeld(cfg);
  REQUIRE(dd.r == 3);
  CHECK(std::abs(dd.roots[1] + 1.0) < 1e-12);
  CHECK(dd.pair[1] == 1);
  CHECK(drinfeld_checks(dd).pairing < 1e-10);
}

TEST_CASE("analytic eigenvalues and the functional relation") {
  ModelConfig cfg;
  const DrinfeldData dd = build_drinfeld(cfg);
  // all four patterns at lambda_q = 2
  CHECK(analytic_eigenvalue({1, 1}, 2.0, dd).real() == doctest::Approx(0.3985285553).epsilon(1e-9));
  CHECK(analytic_eigenvalue({-1, -1}, 2.0, dd).real() == doctest::Approx(3.458638336).epsilon(1e-9));
  const CurvePoint q = point_from_lambda(0.3, cplx(0.8, 0.9), 3);
  const FunctionalResidual f = functional_check(q, dd);
  CHECK(f.relation < 1e-10);
  CHECK(f.pattern_deviation < 1e-12);
}

TEST_CASE("degenerate configurations") {
  ModelConfig cfg;
  cfg.L = 4;
  CHECK_THROWS_AS(build_drinfeld(cfg), Error);
}

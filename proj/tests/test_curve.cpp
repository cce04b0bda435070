#include "doctest.h"
#include "scp/curve.hpp"

using namespace scp;

TEST_CASE("config validation") {
  ModelConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.r() == 2);
  c.L = 4;
  CHECK_THROWS_AS(c.validate(), Error);
  c.L = 3;
  c.kprime = 1.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c.kprime = 0.3;
  c.N = 2;
  c.L = 18;  // 2^17 states
  CHECK_THROWS_AS(c.validate(), Error);
  c.N = 1;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("superintegrable point") {
  const CurvePoint p = si_point(0.3, 3);
  CHECK(std::abs(p.x - p.y) == 0.0);
  CHECK(p.x.real() == doctest::Approx(0.9019707373563444).epsilon(1e-12));
  CHECK(std::pow(p.x, 3).real() == doctest::Approx(0.7337993857053428).epsilon(1e-12));
  CHECK(std::pow(p.t(), 3).real() == doctest::Approx(7.0 / 13).epsilon(1e-12));
  CHECK(curve_residual(p, 0.3, 3) < 1e-14);
  CHECK(std::abs(point_from_lambda(0.3, 1.0, 3).x - p.x) < 1e-15);
}

TEST_CASE("points from lambda") {
  const CurvePoint q = point_from_lambda(0.3, 2.0, 3);
  CHECK(std::pow(q.y, 3).real() == doctest::Approx(0.4193139346887673).epsilon(1e-12));
  CHECK(std::pow(q.x, 3).real() == doctest::Approx(0.8910421112136306).epsilon(1e-12));
  CHECK(std::abs(q.lambda(3) - 2.0) < 1e-14);
  CHECK(curve_residual(q, 0.3, 3) < 1e-14);
  const CurvePoint s = q.swapped();
  CHECK(std::abs(s.lambda(3) - 0.5) < 1e-14);
  CHECK(curve_residual(s, 0.3, 3) < 1e-14);

  const CurvePoint c = point_from_lambda(cplx(0.4, 0.1), cplx(0.7, -0.9), 4);
  CHECK(curve_residual(c, cplx(0.4, 0.1), 4) < 1e-13);
}

TEST_CASE("weights are N-periodic") {
  const CurvePoint p = si_point(0.3, 3);
  for (cplx lam : {cplx(2.0), cplx(0.6, 0.7), cplx(-1.3, 0.2)}) {
    const CurvePoint q = point_from_lambda(0.3, lam, 3);
    CHECK(weight_periodicity_check(p, q, 3).max() < 1e-12);
    CHECK(std::abs(weight_W(p, q, 0, 3) - 1.0) == 0.0);
  }
}

TEST_CASE("seeded sampling") {
  ModelConfig cfg;
  const CurvePoint p = si_point(cfg.kprime, cfg.N);
  std::mt19937_64 a(7), b(7);
  const auto qa = sample_q_points(cfg, p, 5, a);
  const auto qb = sample_q_points(cfg, p, 5, b);
  REQUIRE(qa.size() == 5);
  for (size_t i = 0; i < qa.size(); ++i) {
    CHECK(qa[i].x == qb[i].x);
    const double r = std::abs(qa[i].lambda(cfg.N));
    CHECK(r >= 0.5 - 1e-12);
    CHECK(r <= 2.0 + 1e-12);
    CHECK(min_denominator(p, qa[i], cfg.N) >= 1e-3);
  }
}

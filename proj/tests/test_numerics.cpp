#include "doctest.h"
#include "scp/numerics.hpp"

using namespace scp;

TEST_CASE("roots of unity") {
  CHECK(std::abs(omega_pow(4, 1) - cplx(0, 1)) == 0.0);
  CHECK(std::abs(omega_pow(3, 3) - 1.0) < 1e-15);
  CHECK(std::abs(omega_pow(3, -1) - std::conj(root_of_unity(3))) < 1e-15);
  CHECK(std::abs(omega_pow(5, 7) - omega_pow(5, 2)) < 1e-15);
  CHECK_THROWS_AS(root_of_unity(1), Error);
}

TEST_CASE("omega factorial and binomial") {
  // [2]! = 1 + w at N = 3, i.e. -w^2
  CHECK(std::abs(omega_factorial(2, 3) + omega_pow(3, 2)) < 1e-14);
  CHECK(std::abs(omega_factorial(0, 3) - 1.0) < 1e-15);
  CHECK_THROWS_AS(omega_factorial(3, 3), Error);
  CHECK(std::abs(gauss_binomial(2, 1, 3) - (1.0 + root_of_unity(3))) < 1e-14);
  CHECK(gauss_binomial(2, 3, 3) == cplx(0.0));
  CHECK(gauss_binomial(2, -1, 3) == cplx(0.0));
  // full cyclotomic sum vanishes: [N-1 over 1] at N = 4 is 1 + i + i^2 = i
  CHECK(std::abs(gauss_binomial(3, 1, 4) - cplx(0, 1)) < 1e-14);
}

TEST_CASE("polynomial evaluation and roots") {
  const CPolynomial p({1.0, 7.0, 1.0});
  CHECK(p.degree() == 2);
  CHECK(std::abs(p(2.0) - 19.0) < 1e-14);
  CHECK(std::abs(p.derivative(2.0) - 11.0) < 1e-14);
  const auto z = poly_roots(p);
  REQUIRE(z.size() == 2);
  CHECK(z[0].real() == doctest::Approx(-6.854101966249685).epsilon(1e-13));
  CHECK(z[1].real() == doctest::Approx(-0.145898033750315).epsilon(1e-13));

  const CPolynomial q = CPolynomial::from_roots({1.0, cplx(0, 1), -2.0});
  const auto w = poly_roots(q);
  REQUIRE(w.size() == 3);
  CHECK(std::abs(w[0] + 2.0) < 1e-12);
  CHECK(std::abs(w[1] - cplx(0, 1)) < 1e-12);
  CHECK(std::abs(w[2] - 1.0) < 1e-12);

  CHECK_THROWS_AS(poly_roots(CPolynomial({1.0, -2.0, 1.0})), Error);
}

TEST_CASE("lagrange beta") {
  const BetaMatrix b = lagrange_beta({0.5, 2.0});
  CHECK(b(1, 0).real() == doctest::Approx(-1.0 / 3));
  CHECK(b(1, 1).real() == doctest::Approx(2.0 / 3));
  CHECK(b(0, 0).real() == doctest::Approx(4.0 / 3));
  CHECK(b.residual_rows() < 1e-14);
  CHECK(b.residual_cols() < 1e-14);
}

TEST_CASE("inverse power sums and Newton identities") {
  const auto z = poly_roots(CPolynomial({1.0, 7.0, 1.0}));
  const auto d = power_sums_inverse(z, 2);
  CHECK(d[1].real() == doctest::Approx(7.0));
  CHECK(d[2].real() == doctest::Approx(-47.0));
  CHECK(newton_identity_check({1.0, 7.0, 1.0}, z) < 1e-12);
}

#include "doctest.h"
#include "scp/gfun.hpp"

using namespace scp;

TEST_CASE("prefix and suffix sums") {
  const EdgeConfig n{2, 0, 1};
  CHECK(prefix_sums(n) == std::vector<int>{0, 2, 2});
  CHECK(suffix_sums(n) == std::vector<int>{1, 1, 0});
  CHECK(charge(n) == 3);
  CHECK(weighted_sum(n) == 5);
}

TEST_CASE("configurations by charge") {
  CHECK(configs_with_charge(3, 3, 3).size() == 7);
  CHECK(configs_with_charge(3, 6, 3).size() == 50);
  CHECK(configs_with_charge(4, 4, 4).size() == 31);
  const auto c = configs_with_charge(3, 3, 3);
  CHECK(c.front() == EdgeConfig{0, 1, 2});
  CHECK(c.back() == EdgeConfig{2, 1, 0});
}

TEST_CASE("K coefficients") {
  CHECK(std::abs(k_coeff({0, 0, 0}, 1, 3) - 3.0) < 1e-14);
  CHECK(std::abs(k_coeff({0, 0, 0}, 3, 3) - 7.0) < 1e-14);
  CHECK(std::abs(k_coeff({0, 0, 0}, 0, 3) - 1.0) < 1e-14);
}

TEST_CASE("series oracle agrees with K sums") {
  for (const EdgeConfig& n : {EdgeConfig{0, 1, 2}, EdgeConfig{1, 1, 1}, EdgeConfig{2, 0, 1}})
    for (GKind kind : {GKind::Forward, GKind::Bar}) {
      const auto s = gen_function_series(n, 6, 3, kind);
      for (int m = 0; m <= 6; ++m) CHECK(std::abs(s[m] - k_coeff(n, m, 3, kind)) < 1e-12);
    }
}

TEST_CASE("G polynomials") {
  // the zero configuration reproduces P
  const CPolynomial p = g_poly(0, {0, 0, 0}, GKind::Bar, 3);
  REQUIRE(p.degree() == 2);
  CHECK(std::abs(p.coeff(1) - 7.0) < 1e-13);
  const CPolynomial g = g_poly(0, {1, 1, 1}, GKind::Forward, 3);
  CHECK(std::abs(g.coeff(0) - 1.0) < 1e-14);
  CHECK(std::abs(g.coeff(1) + 1.0) < 1e-13);
  CHECK_THROWS_AS(g_poly(1, {1, 1, 1}, GKind::Forward, 3), Error);

  const cplx t(0.3, 0.4);
  CHECK(rel_diff(g(std::pow(t, 3)), g_closed({1, 1, 1}, t, 3)) < 1e-12);
  CHECK_THROWS_AS(gen_function({1, 1, 1}, 1.0, 3), Error);
}

TEST_CASE("charge-N identities") {
  for (auto [N, L] : {std::pair{3, 3}, std::pair{4, 4}}) {
    ModelConfig cfg;
    cfg.N = N;
    cfg.L = L;
    const DrinfeldData dd = build_drinfeld(cfg);
    const ChargeNTable tab = build_charge_n_table(N, L);
    CHECK(gram_check(dd, tab) < 1e-10);
    CHECK(h_identity_residual(dd, tab) < 1e-10);
    const LeadingCoeffResidual lc = leading_coeff_check(dd, tab);
    CHECK(lc.polynomial < 1e-12);
    CHECK(lc.direct < 1e-12);
  }
}

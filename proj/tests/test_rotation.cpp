#include "doctest.h"
#include "scp/suites.hpp"

using namespace scp;

TEST_CASE("mode operators") {
  const Mat2 H = mode_H(), Ep = mode_Eplus(), Em = mode_Eminus();
  CHECK((Ep * Em - Em * Ep - H).norm() < 1e-15);
  CHECK((H * Ep - Ep * H - 2.0 * Ep).norm() < 1e-15);
}

TEST_CASE("rotations at every mode") {
  for (auto [N, L] : {std::pair{3, 3}, std::pair{4, 4}, std::pair{3, 6}}) {
    ModelConfig cfg;
    cfg.N = N;
    cfg.L = L;
    const DrinfeldData dd = build_drinfeld(cfg);
    const CurvePoint q = point_from_lambda(cfg.kprime, cplx(0.9, 0.6), N);
    std::vector<Rotation> rots;
    for (int j = 0; j < dd.r; ++j) {
      rots.push_back(solve_rotations(j, dd));
      CHECK(mode_residuals(j, dd, rots.back()).max() < 1e-10);
      CHECK(factor_check(j, q, dd, rots.back()).max() < 1e-10);
      CHECK(s22_flip_invariance(j, q, dd) < 1e-10);
    }
    CHECK(assembly_check(q, dd, rots).max() < 1e-10);
  }
}

TEST_CASE("mn matrices at N = 3, L = 3") {
  ModelConfig cfg;
  const DrinfeldData dd = build_drinfeld(cfg);
  const MN mn = mn_matrices(0, dd);
  CHECK(std::abs(mn.M.determinant() - 1.0) < 1e-12);
  CHECK(std::abs(mn.N.determinant() - 1.0) < 1e-12);
  CHECK(std::abs(mn.M(0, 1) - mn.M(1, 0)) < 1e-14);
}

TEST_CASE("kron ordering") {
  Mat2 a = Mat2::Zero(), b = Mat2::Identity();
  a(0, 1) = 1.0;
  const auto k = kron_all({a, b});
  CHECK(k(0, 2) == cplx(1.0));
  CHECK(k(1, 3) == cplx(1.0));
  CHECK(k.cwiseAbs().sum() == 2.0);
}

#include "doctest.h"
#include "scp/suites.hpp"

using namespace scp;

TEST_CASE("ground states and raised states") {
  ModelConfig cfg;
  cfg.N = 4;
  cfg.L = 4;
  const Workspace ws = build_workspace(cfg, 4);
  const CVector O = omega_state(ws.basis), Ob = omegabar_state(ws.basis);
  CHECK(O(0) == cplx(1.0));
  CHECK(Ob(ws.basis.size() - 1) == cplx(1.0));
  CHECK(dual_gram_residual(ws.dd, ws.tab, ws.basis) < 1e-10);
  CHECK(x1_power_check(4, 4) < 1e-14);
  CHECK(x1_power_check(3, 6) < 1e-14);
}

TEST_CASE("spectral inclusion and ratios") {
  for (auto [N, L] : {std::pair{3, 3}, std::pair{4, 4}}) {
    ModelConfig cfg;
    cfg.N = N;
    cfg.L = L;
    const Workspace ws = build_workspace(cfg, 4);
    const CurvePoint& q = ws.qs[0];
    const CMatrix T = build_T(0, ws.dd.p, q, ws.basis);
    const CMatrix xy = build_That(0, ws.dd.p, q, ws.basis, HatOrder::XY);
    const CMatrix yx = build_That(0, ws.dd.p, q, ws.basis, HatOrder::YX);
    const SpectrumFrame f = spectrum_match(xy, T, q, ws.dd);
    CHECK(f.entries.size() == (1u << ws.dd.r));
    CHECK(f.max_rel_error < 1e-9);
    CHECK_FALSE(f.collision);
    CHECK(std::abs(f.c - 1.0) < 1e-9);
    CHECK(ratio_checks(T, yx, xy, q, ws.dd, ws.tab, ws.basis).max() < 1e-9);
  }
}

TEST_CASE("explicit eigenvector basis") {
  ModelConfig cfg;
  const Workspace ws = build_workspace(cfg, 4);
  const CMatrix psi = psi_matrix(ws.dd, ws.tab, ws.basis);
  CHECK(psi.cols() == 4);
  CHECK(psi_independence(psi) > 1e-3);
  const CMatrix T = build_T(0, ws.dd.p, ws.qs[0], ws.basis);
  const CMatrix xy = build_That(0, ws.dd.p, ws.qs[0], ws.basis, HatOrder::XY);
  const CMatrix yx = build_That(0, ws.dd.p, ws.qs[0], ws.basis, HatOrder::YX);
  const IntertwineResiduals r = intertwine_full_check(T, xy, yx, ws.qs[0], ws.dd, ws.tab, ws.basis, ws.rots);
  CHECK(r.twisted_max() < 1e-10);
  CHECK(r.literal_max() > 1e-3);
  CHECK(std::abs(std::abs(r.c) - 1.0) < 1e-10);
}

TEST_CASE("middle patterns are out of scope") {
  ModelConfig cfg;
  cfg.N = 5;
  cfg.L = 5;
  const Workspace ws = build_workspace(cfg, 4);
  CHECK_THROWS_AS(psi_explicit({1, -1, -1, 1}, ws.dd, ws.tab, ws.basis), Error);
}

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "scp/suites.hpp"

using namespace scp;

TEST_CASE("sector basis") {
  const SectorBasis b = enumerate_basis(3, 3);
  CHECK(b.size() == 9);
  CHECK(b.omega_index() == 0);
  CHECK(b.omegabar_index() == 8);
  CHECK(b.confs[1] == EdgeConfig{0, 1, 2});
  CHECK(b.index({1, 1, 1}) == 4);
  CHECK(b.index({1, 1, 0}) == -1);
  CHECK(enumerate_basis(3, 6).size() == 243);
  CHECK_THROWS_AS(enumerate_basis(3, 6, 100), Error);
}

TEST_CASE("shift operator is a permutation") {
  const SectorBasis b = enumerate_basis(4, 4);
  const CMatrix S = shift_operator(b);
  CHECK((S * S.transpose() - CMatrix::Identity(b.size(), b.size())).norm() < 1e-15);
  CMatrix P = CMatrix::Identity(b.size(), b.size());
  for (int i = 0; i < 4; ++i) P = S * P;
  CHECK((P - CMatrix::Identity(b.size(), b.size())).norm() < 1e-15);
}

TEST_CASE("transfer matrices at N = 3, L = 3") {
  ModelConfig cfg;
  const Workspace ws = build_workspace(cfg, 4);
  const CurvePoint q = point_from_lambda(0.3, 2.0, 3);
  const CMatrix T = build_T(0, ws.dd.p, q, ws.basis);
  CHECK(T(0, 0).real() == doctest::Approx(3.41175942).epsilon(1e-8));
  CHECK(T(8, 0).real() == doctest::Approx(0.01427514402).epsilon(1e-8));

  const CMatrix yx = build_That(0, ws.dd.p, q, ws.basis, HatOrder::YX);
  const CMatrix ob = build_That(0, ws.dd.p, q, ws.basis, HatOrder::XY, 3);
  const CMatrix xy = build_That(0, ws.dd.p, q.swapped(), ws.basis, HatOrder::YX);
  CHECK((ob - xy).norm() < 1e-14);
  CHECK((yx - xy).norm() > 1e-3);
  CHECK((build_T(0, ws.dd.p, q, ws.basis, 4) - T).norm() == 0.0);

  const ElementResiduals e = closed_form_elements(ws, q, T, yx);
  CHECK(e.max() < 1e-11);
  const CMatrix S = shift_operator(ws.basis);
  CHECK(translation_residual(T, S) < 1e-13);

  const CMatrix phys = build_physical_T(0, ws.dd.p, q, ws.basis);
  const cplx pre = physical_prefactor(q, ws.dd.p, 3, 3, TransferVariant::T);
  CHECK((phys - pre * T).norm() / phys.norm() < 1e-12);
}

TEST_CASE("charged sectors") {
  ModelConfig cfg;
  cfg.L = 6;
  const Workspace ws = build_workspace(cfg, 4);
  for (int Q : {1, 2}) {
    const CMatrix T = build_T(Q, ws.dd.p, ws.qs[0], ws.basis);
    CHECK(charged_vanishing(ws, T) < 1e-13);
    CHECK(translation_residual(T, shift_operator(ws.basis, Q)) < 1e-12);
    CHECK(translation_residual(T, shift_operator(ws.basis)) > 1e-2);
  }
}

TEST_CASE("matrix dump") {
  const SectorBasis b = enumerate_basis(2, 2);
  CMatrix M(2, 2);
  M << cplx(1, 2), 0.0, 0.0, cplx(-3, 0.5);
  const std::string path = "scp_dump_test.csv";
  dump_matrix_csv(M, path, "N=2 L=2");
  std::ifstream f(path);
  std::string header, row;
  std::getline(f, header);
  std::getline(f, row);
  CHECK(header == "row,col,re,im");
  CHECK(row.rfind("0,0,1,2", 0) == 0);
  std::ifstream side(path + ".header");
  CHECK(side.good());
  std::remove(path.c_str());
  std::remove((path + ".header").c_str());
}

#pragma once

#include <Eigen/Dense>
#include <string>
#include <unordered_map>
#include <vector>

#include "scp/curve.hpp"
#include "scp/gfun.hpp"

namespace scp {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Edge configurations with charge = 0 mod N, lexicographic in (n_1..n_L).
struct SectorBasis {
  int N = 0, L = 0;
  std::vector<EdgeConfig> confs;

  int size() const { return static_cast<int>(confs.size()); }
  /// Position of a configuration, or -1 if outside the sector.
  int index(const EdgeConfig& n) const;
  int omega_index() const;     // all zeros
  int omegabar_index() const;  // all N-1

 private:
  friend SectorBasis enumerate_basis(int N, int L, long long cap);
  std::vector<int> lookup_;  // mixed-radix code -> position
};

SectorBasis enumerate_basis(int N, int L, long long cap = 100000);

/// Argument order of the hat matrix. YX is the literal edge formula at q;
/// XY evaluates it at the swapped point (y_q, x_q, 1/mu_q).
enum class HatOrder { YX, XY };

/// Matrix elements <n'|T_Q(x_q, y_q)|n>, rows n', columns n.
CMatrix build_T(int Q, const CurvePoint& p, const CurvePoint& q, const SectorBasis& basis, int jobs = 1);

CMatrix build_That(int Q, const CurvePoint& p, const CurvePoint& q, const SectorBasis& basis,
                   HatOrder order, int jobs = 1);

/// sum_a w^{-Qa} prod_j W_pq(a - N_j + N'_j) Wbar_p'q(a - N_{j+1} + N'_j), bare weights.
CMatrix build_physical_T(int Q, const CurvePoint& p, const CurvePoint& q, const SectorBasis& basis);

enum class TransferVariant { T, That };

/// N^{L/2} (x_q - y_p)^L / (x_q^N - y_p^N)^L for T, and x_p in place of y_p for T-hat.
cplx physical_prefactor(const CurvePoint& q, const CurvePoint& p, int N, int L, TransferVariant v);

/// dual^T M vec, no conjugation.
cplx contracted_element(const CVector& dual, const CMatrix& M, const CVector& vec);

/// Cyclic shift n_j -> n_{j+1} on the basis. For Q != 0 the column of n carries
/// the phase w^{-Q n_1}, which is what T_Q commutes with.
CMatrix shift_operator(const SectorBasis& basis, int Q = 0);

/// CSV rows "row,col,re,im" and a sidecar header file with the run metadata.
void dump_matrix_csv(const CMatrix& M, const std::string& path, const std::string& header);

}  // namespace scp

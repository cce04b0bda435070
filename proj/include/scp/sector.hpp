#pragma once

#include <vector>

#include "scp/drinfeld.hpp"
#include "scp/gfun.hpp"
#include "scp/rotation.hpp"
#include "scp/transfer.hpp"

namespace scp {

CVector omega_state(const SectorBasis& basis);
CVector omegabar_state(const SectorBasis& basis);

/// E_m^+|Omega>: beta_{m,0} z_m w^{-sum j n_j} G(n, z_m) on charge-N configs.
CVector eplus_omega(int m, const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis);
/// E_m^-|Omegabar>: beta_{m,0} G(n, z_m) at the config N-1-n.
CVector eminus_omegabar(int m, const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis);
/// <Omega|E_m^- as a row vector: -beta_{m,0} w^{sum j n_j} Gbar(n, z_m).
CVector eminus_dual_omega(int m, const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis);
/// <Omegabar|E_m^+ as a row vector: -beta_{m,0} z_m Gbar(n, z_m) at N-1-n.
CVector eplus_dual_omegabar(int m, const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis);

/// Bilinear Gram matrices of the duals against the kets, each compared with
/// the identity. Returns the larger deviation.
double dual_gram_residual(const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis);

/// |w^{-(N-1) L(L+1)/2} - w^{L(L+1)/2}|
double x1_power_check(int N, int L);

/// Psi(xi): extremes, single raises from Omega, single lowerings from Omegabar.
/// Throws Unsupported for patterns at Hamming distance >= 2 from both extremes.
CVector psi_explicit(const SpinPattern& xi, const DrinfeldData& dd, const ChargeNTable& tab,
                     const SectorBasis& basis);

/// Columns Psi(pattern_from_index(i)) for every i, or throws Unsupported.
CMatrix psi_matrix(const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis);

struct SpectrumEntry {
  SpinPattern xi;
  cplx analytic;  // G(lambda_q, xi)^2
  cplx matched;   // nearest numeric eigenvalue of That(x,y) T(x,y)
  double rel_error = 0.0;
};

struct SpectrumFrame {
  cplx c;                  // matched / analytic for the all-minus pattern
  double max_rel_error = 0.0;
  bool collision = false;  // two patterns landed on one eigenvalue
  bool degenerate = false; // analytic values not separated
  std::vector<SpectrumEntry> entries;
};

SpectrumFrame spectrum_match(const CMatrix& That_xy, const CMatrix& T, const CurvePoint& q,
                             const DrinfeldData& dd, double gap_tol = 1e-6);

struct RatioResiduals {
  double forward_omega = 0.0;      // <O|T|O>/<O|E-T|O>
  double forward_omegabar = 0.0;   // <Ob|T|Ob>/<Ob|E+T|Ob>
  double hat_yx_omega = 0.0;
  double hat_yx_omegabar = 0.0;
  double hat_xy_omega = 0.0;
  double hat_xy_omegabar = 0.0;
  double max() const;
};

RatioResiduals ratio_checks(const CMatrix& T, const CMatrix& That_yx, const CMatrix& That_xy,
                            const CurvePoint& q, const DrinfeldData& dd, const ChargeNTable& tab,
                            const SectorBasis& basis);

struct IntertwineResiduals {
  // X_i = Psi R, Y_i = Psi S, as stated
  double literal_forward = 0.0;  // |T X - G Y| / (|T| |X|)
  double literal_hat_xy = 0.0;   // |That(x,y) Y - G X| / (|That| |Y|)
  double literal_hat_yx = 0.0;   // |That(y,x) Y - G(1/lambda) X| / (|That| |Y|)
  // X_i = Psi K^{-1} R, Y_i = c Psi S with K^{-1} = (x) diag(-1/z_j, 1)
  double twisted_forward = 0.0;
  double twisted_hat_xy = 0.0;
  double twisted_hat_yx = 0.0;
  cplx c;  // <Omega|T|Omega> / prod (X_j + Y_j)
  double literal_max() const;
  double twisted_max() const;
};

IntertwineResiduals intertwine_full_check(const CMatrix& T, const CMatrix& That_xy, const CMatrix& That_yx,
                                          const CurvePoint& q, const DrinfeldData& dd, const ChargeNTable& tab,
                                          const SectorBasis& basis, const std::vector<Rotation>& rots);

/// Smallest singular value of the column-normalised Psi matrix.
double psi_independence(const CMatrix& psi);

/// Largest singular value.
double operator_norm(const CMatrix& M);

}  // namespace scp

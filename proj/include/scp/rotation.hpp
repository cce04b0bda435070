#pragma once

#include <Eigen/Dense>
#include <vector>

#include "scp/drinfeld.hpp"

namespace scp {

using Mat2 = Eigen::Matrix2cd;

/// Mode basis: index 0 is xi = +1, index 1 is xi = -1.
Mat2 mode_H();
Mat2 mode_Eplus();
Mat2 mode_Eminus();

struct XYZ {
  cplx X, Y, Z;
};

struct Epsilon {
  cplx bar;  // bar-epsilon_j, principal branch
  cplx eps;  // rho * bar
};

Epsilon epsilon(int j, const DrinfeldData& dd);

/// Forward scalars: X+Y = e k (y_p^N z - x_q^N), Z = e k (y_p^N - x_q^N),
/// X-Y = e (lambda_p/lambda_q) k (y_q^N/z - x_p^N).
XYZ xyz(int j, const CurvePoint& q, const DrinfeldData& dd);
/// Second form of Z: e (lambda_p/lambda_q) k (y_q^N - x_p^N).
cplx z_alt(int j, const CurvePoint& q, const DrinfeldData& dd);
/// Scalars of That(y_q, x_q).
XYZ xyz_bar(int j, const CurvePoint& q, const DrinfeldData& dd);
/// Scalars of That(x_q, y_q).
XYZ xyz_prime(int j, const CurvePoint& q, const DrinfeldData& dd);

/// X - H Y + (E+ + E-) Z in the mode basis.
Mat2 factor_matrix(const XYZ& s);

struct MN {
  Mat2 M, N;
};

MN mn_matrices(int j, const DrinfeldData& dd);

struct Rotation {
  Mat2 S, R;
};

/// S_j from s22 (principal root), s12, s21, s11; R_j the transpose of S_j^{-1}.
Rotation solve_rotations(const MN& mn, cplx theta, cplx kprime);
Rotation solve_rotations(int j, const DrinfeldData& dd);

/// Every 2x2 identity of the rotation construction at one mode, as named
/// residuals (relative to operand magnitudes where a scale exists).
struct ModeResiduals {
  double det_mn = 0.0;       // det M = det N = 1
  double symmetry = 0.0;     // m12 = m21, n12 = n21 = n22
  double eps_norm = 0.0;     // k'(1/z - 1) lambda_p bar-eps^2 = 1
  double consistency = 0.0;  // 2 cosh 2 theta = 2 m12 n12 - m11 n22 - m22 n11
  double lambda_theta = 0.0; // lambda_p + 1/lambda_p = 2 cosh(2 theta)/z - (k' + 1/k')(1/z - 1)
  double t_products = 0.0;   // T12 T*12, T11 T*22, T22 T*11
  double s_products = 0.0;   // s11 s22 and s12 s21
  double free_param = 0.0;   // r22/s22 = -T11/(e^{2 theta} - k') = (e^{2 theta} - k')/T*22
  double det_sr = 0.0;       // det S = det R = 1
  double inverse_transpose = 0.0;
  double constant_linear = 0.0;  // S(c - sH)R^-1 = M, S(c + sH)R^-1 = -N
  double inverted = 0.0;         // R(c - sH)S^-1 = -N^-1, R(c + sH)S^-1 = M^-1
  double max() const;
};

ModeResiduals mode_residuals(int j, const DrinfeldData& dd, const Rotation& rot);

struct FactorResiduals {
  double forward = 0.0;     // S(A - HB)R^-1 = X - HY + (E+ + E-)Z
  double hat_yx = 0.0;      // R(Abar - H Bbar)S^-1 with the barred scalars
  double hat_xy = 0.0;      // R(A - HB)S^-1 with the primed scalars
  double invdet = 0.0;      // X^2 - Y^2 - Z^2 = A^2 - B^2 (relative)
  double a2b2 = 0.0;        // A^2 - B^2 = rho^2 k^2 (t_p^N z - t_q^N)/(k' lambda_q) (relative)
  double z_forms = 0.0;     // two forms of Z (relative)
  double max() const;
};

FactorResiduals factor_check(int j, const CurvePoint& q, const DrinfeldData& dd, const Rotation& rot);

/// Residual spread of factor_check and mode_residuals when s22 changes sign.
double s22_flip_invariance(int j, const CurvePoint& q, const DrinfeldData& dd);

/// Re-extracts M and N from the q-dependent factor at (q1, q2) and at (q3, q4),
/// re-solves the rotations and returns the largest entrywise difference of
/// S_j, R_j between the two pairs and against the direct solution.
double q_independence(int j, const CurvePoint& q1, const CurvePoint& q2, const CurvePoint& q3,
                      const CurvePoint& q4, const DrinfeldData& dd);

struct SectorRep {
  Eigen::MatrixXcd T, That, R, S;  // 2^r x 2^r, mode 0 most significant
};

Eigen::MatrixXcd kron_all(const std::vector<Mat2>& factors);

/// T from the forward factors, That from the primed factors (That(x_q, y_q)).
SectorRep assemble_sector(const CurvePoint& q, const DrinfeldData& dd, const std::vector<Rotation>& rots);

struct AssemblyResiduals {
  double factor_det = 0.0;       // det F_j = A_j^2 - B_j^2
  double factor_square = 0.0;    // eig(F'_j F_j) = (A_j -+ B_j)^2
  double product_spectrum = 0.0; // eig(That_rep T_rep) = G^2 over patterns
  double ground_element = 0.0;   // <all-|T|all-> = prod(X+Y)
  double flip_element = 0.0;     // single flip = Z_m prod_{j != m}(X+Y)
  double rot_det = 0.0;          // det R_rep = det S_rep = 1
  double rot_inverse = 0.0;      // R_rep = transpose(S_rep^-1)
  double max() const;
};

AssemblyResiduals assembly_check(const CurvePoint& q, const DrinfeldData& dd, const std::vector<Rotation>& rots);

}  // namespace scp

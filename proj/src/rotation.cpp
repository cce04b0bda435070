#include "scp/rotation.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace scp {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double rel_mat(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const double scale = std::max({max_abs(a), max_abs(b), 1e-300});
  return max_abs(a - b) / scale;
}

Rotation solve_with_sign(const MN& mn, cplx th, cplx kp, double sign) {
  const cplx E = std::exp(th), Ei = std::exp(-th), sh2 = std::sinh(2.0 * th);
  const Mat2& M = mn.M;
  const Mat2& Nm = mn.N;
  const cplx den = M(1, 1) * E + Nm(1, 1) * Ei;
  if (std::abs(sh2) < 1e-12 || std::abs(den) < 1e-14)
    throw Error(ErrorKind::Degenerate, "solve_rotations: vanishing sinh(2 theta) or s22 denominator");
  const cplx s22 = sign * std::sqrt(den / (2.0 * sh2));
  const cplx s12 = (M(0, 1) * E + Nm(0, 1) * Ei) / den * s22;
  const cplx s21 = (std::exp(-2.0 * th) - kp) / (2.0 * s12 * sh2);
  const cplx s11 = (std::exp(2.0 * th) - kp) / (2.0 * s22 * sh2);
  Rotation rot;
  rot.S << s11, s12, s21, s22;
  rot.R << s22, -s21, -s12, s11;
  return rot;
}

}  // namespace

Mat2 mode_H() {
  Mat2 h;
  h << 1, 0, 0, -1;
  return h;
}

Mat2 mode_Eplus() {
  Mat2 e;
  e << 0, 1, 0, 0;
  return e;
}

Mat2 mode_Eminus() { return mode_Eplus().transpose(); }

Epsilon epsilon(int j, const DrinfeldData& dd) {
  const cplx z = dd.roots[j];
  if (std::abs(z - 1.0) < 1e-12) throw Error(ErrorKind::Singular, "epsilon: z_j = 1");
  cplx w = 1.0 / (dd.kprime * (1.0 / z - 1.0) * dd.lambda_p);
  // a signed zero imaginary part would pick the lower branch on the negative axis
  if (w.imag() == 0.0) w = {w.real(), 0.0};
  const cplx bar = std::sqrt(w);
  return {bar, dd.rho * bar};
}

static XYZ from_sums(cplx xpy, cplx z, cplx xmy) { return {(xpy + xmy) / 2.0, (xpy - xmy) / 2.0, z}; }

XYZ xyz(int j, const CurvePoint& q, const DrinfeldData& dd) {
  const int N = dd.N;
  const cplx e = epsilon(j, dd).eps, k = dd.k, z = dd.roots[j];
  const cplx lq = q.lambda(N), lp = dd.lambda_p;
  const cplx xpN = std::pow(dd.p.x, N), ypN = std::pow(dd.p.y, N);
  const cplx xqN = std::pow(q.x, N), yqN = std::pow(q.y, N);
  return from_sums(e * k * (ypN * z - xqN), e * k * (ypN - xqN), e * (lp / lq) * k * (yqN / z - xpN));
}

cplx z_alt(int j, const CurvePoint& q, const DrinfeldData& dd) {
  const int N = dd.N;
  const cplx e = epsilon(j, dd).eps;
  return e * (dd.lambda_p / q.lambda(N)) * dd.k * (std::pow(q.y, N) - std::pow(dd.p.x, N));
}

XYZ xyz_bar(int j, const CurvePoint& q, const DrinfeldData& dd) {
  const int N = dd.N;
  const cplx e = epsilon(j, dd).eps, k = dd.k, z = dd.roots[j];
  const cplx lq = q.lambda(N), lp = dd.lambda_p;
  const cplx xpN = std::pow(dd.p.x, N), ypN = std::pow(dd.p.y, N);
  const cplx xqN = std::pow(q.x, N), yqN = std::pow(q.y, N);
  return from_sums(e * lp * k * (xpN - yqN / z), -e * lp * k * (xpN - yqN), e * lq * k * (xqN - ypN * z));
}

XYZ xyz_prime(int j, const CurvePoint& q, const DrinfeldData& dd) {
  const int N = dd.N;
  const cplx e = epsilon(j, dd).eps, k = dd.k, z = dd.roots[j];
  const cplx lq = q.lambda(N), lp = dd.lambda_p;
  const cplx xpN = std::pow(dd.p.x, N), ypN = std::pow(dd.p.y, N);
  const cplx xqN = std::pow(q.x, N), yqN = std::pow(q.y, N);
  return from_sums(e * lp * k * (xpN - xqN / z), -e * lp * k * (xpN - xqN), (e / lq) * k * (yqN - ypN * z));
}

Mat2 factor_matrix(const XYZ& s) {
  return s.X * Mat2::Identity() - s.Y * mode_H() + s.Z * (mode_Eplus() + mode_Eminus());
}

MN mn_matrices(int j, const DrinfeldData& dd) {
  const cplx e = epsilon(j, dd).bar, kp = dd.kprime, lp = dd.lambda_p, z = dd.roots[j];
  MN mn;
  const cplx m12 = -e * kp * lp;
  mn.M << -e * kp * lp / z, m12, m12, e * (z - 1.0 - kp * z * lp);
  const cplx n12 = e * kp;
  mn.N << e * (lp / z - lp + kp), n12, n12, n12;
  return mn;
}

Rotation solve_rotations(const MN& mn, cplx theta, cplx kprime) {
  return solve_with_sign(mn, theta, kprime, 1.0);
}

Rotation solve_rotations(int j, const DrinfeldData& dd) {
  return solve_rotations(mn_matrices(j, dd), dd.theta[j], dd.kprime);
}

double ModeResiduals::max() const {
  return std::max({det_mn, symmetry, eps_norm, consistency, lambda_theta, t_products, s_products,
                   free_param, det_sr, inverse_transpose, constant_linear, inverted});
}

ModeResiduals mode_residuals(int j, const DrinfeldData& dd, const Rotation& rot) {
  ModeResiduals res;
  const MN mn = mn_matrices(j, dd);
  const Mat2 &M = mn.M, &Nm = mn.N, &S = rot.S, &R = rot.R;
  const cplx th = dd.theta[j], E = std::exp(th), kp = dd.kprime, z = dd.roots[j], lp = dd.lambda_p;
  const cplx e2m = std::exp(2.0 * th) - kp, em2m = std::exp(-2.0 * th) - kp;
  const cplx sh2 = std::sinh(2.0 * th);

  res.det_mn = std::max(std::abs(M.determinant() - 1.0), std::abs(Nm.determinant() - 1.0));
  res.symmetry = std::max({std::abs(M(0, 1) - M(1, 0)), std::abs(Nm(0, 1) - Nm(1, 0)),
                           std::abs(Nm(0, 1) - Nm(1, 1))});
  const cplx eb = epsilon(j, dd).bar;
  res.eps_norm = std::abs(kp * (1.0 / z - 1.0) * lp * eb * eb - 1.0);
  res.consistency = rel_diff(2.0 * std::cosh(2.0 * th),
                             2.0 * M(0, 1) * Nm(0, 1) - M(0, 0) * Nm(1, 1) - M(1, 1) * Nm(0, 0));
  res.lambda_theta = rel_diff(lp + 1.0 / lp, 2.0 / z * std::cosh(2.0 * th) - (kp + 1.0 / kp) * (1.0 / z - 1.0));

  auto T = [&](int a, int b) { return M(a, b) / E + Nm(a, b) * E; };
  auto Ts = [&](int a, int b) { return M(a, b) * E + Nm(a, b) / E; };
  res.t_products = std::max({rel_diff(T(0, 1) * Ts(0, 1), -em2m * e2m), rel_diff(T(0, 0) * Ts(1, 1), -e2m * e2m),
                             rel_diff(T(1, 1) * Ts(0, 0), -em2m * em2m)});
  res.s_products = std::max(rel_diff(S(0, 0) * S(1, 1), e2m / (2.0 * sh2)),
                            rel_diff(S(0, 1) * S(1, 0), em2m / (2.0 * sh2)));
  const cplx ratio = R(1, 1) / S(1, 1);
  res.free_param = std::max(rel_diff(ratio, -T(0, 0) / e2m), rel_diff(ratio, e2m / Ts(1, 1)));
  res.det_sr = std::max(std::abs(S.determinant() - 1.0), std::abs(R.determinant() - 1.0));
  res.inverse_transpose = rel_mat(R, S.inverse().transpose());

  const Mat2 I = Mat2::Identity(), H = mode_H();
  const cplx c = std::cosh(th), s = std::sinh(th);
  res.constant_linear = std::max(rel_mat(S * (c * I - s * H) * R.inverse(), M),
                                 rel_mat(S * (c * I + s * H) * R.inverse(), -Nm));
  res.inverted = std::max(rel_mat(R * (c * I - s * H) * S.inverse(), -Nm.inverse()),
                          rel_mat(R * (c * I + s * H) * S.inverse(), M.inverse()));
  return res;
}

double FactorResiduals::max() const { return std::max({forward, hat_yx, hat_xy, invdet, a2b2, z_forms}); }

FactorResiduals factor_check(int j, const CurvePoint& q, const DrinfeldData& dd, const Rotation& rot) {
  FactorResiduals res;
  const int N = dd.N;
  const cplx lq = q.lambda(N);
  const AB ab = ab_values(j, lq, dd), abb = ab_bar_values(j, lq, dd);
  const Mat2 I = Mat2::Identity(), H = mode_H();
  const XYZ f = xyz(j, q, dd), fb = xyz_bar(j, q, dd), fp = xyz_prime(j, q, dd);

  res.forward = rel_mat(rot.S * (ab.A * I - ab.B * H) * rot.R.inverse(), factor_matrix(f));
  res.hat_yx = rel_mat(rot.R * (abb.A * I - abb.B * H) * rot.S.inverse(), factor_matrix(fb));
  res.hat_xy = rel_mat(rot.R * (ab.A * I - ab.B * H) * rot.S.inverse(), factor_matrix(fp));

  const cplx a2b2 = ab.A * ab.A - ab.B * ab.B;
  res.invdet = rel_diff(f.X * f.X - f.Y * f.Y - f.Z * f.Z, a2b2);
  const cplx k2 = dd.k * dd.k;
  const cplx rhs = dd.rho * dd.rho * k2 * (std::pow(dd.p.t(), N) * dd.roots[j] - std::pow(q.t(), N)) /
                   (dd.kprime * lq);
  res.a2b2 = rel_diff(a2b2, rhs);
  res.z_forms = rel_diff(f.Z, z_alt(j, q, dd));
  return res;
}

double s22_flip_invariance(int j, const CurvePoint& q, const DrinfeldData& dd) {
  const MN mn = mn_matrices(j, dd);
  const Rotation a = solve_with_sign(mn, dd.theta[j], dd.kprime, 1.0);
  const Rotation b = solve_with_sign(mn, dd.theta[j], dd.kprime, -1.0);
  const FactorResiduals fa = factor_check(j, q, dd, a), fb = factor_check(j, q, dd, b);
  const ModeResiduals ma = mode_residuals(j, dd, a), mb = mode_residuals(j, dd, b);
  return std::max({std::abs(fa.forward - fb.forward), std::abs(fa.hat_yx - fb.hat_yx),
                   std::abs(fa.hat_xy - fb.hat_xy), std::abs(ma.max() - mb.max()),
                   rel_mat(a.S, -b.S), rel_mat(a.R, -b.R)});
}

static MN extract_mn(int j, const CurvePoint& qa, const CurvePoint& qb, const DrinfeldData& dd) {
  // F(lambda) = rho M + (rho/lambda) N
  const cplx ia = 1.0 / qa.lambda(dd.N), ib = 1.0 / qb.lambda(dd.N);
  const Mat2 Fa = factor_matrix(xyz(j, qa, dd)), Fb = factor_matrix(xyz(j, qb, dd));
  const Mat2 F1 = (Fa - Fb) / (ia - ib);
  const Mat2 F0 = Fa - F1 * ia;
  return {F0 / dd.rho, F1 / dd.rho};
}

double q_independence(int j, const CurvePoint& q1, const CurvePoint& q2, const CurvePoint& q3,
                      const CurvePoint& q4, const DrinfeldData& dd) {
  const Rotation a = solve_rotations(extract_mn(j, q1, q2, dd), dd.theta[j], dd.kprime);
  const Rotation b = solve_rotations(extract_mn(j, q3, q4, dd), dd.theta[j], dd.kprime);
  const Rotation c = solve_rotations(j, dd);
  return std::max({rel_mat(a.S, b.S), rel_mat(a.R, b.R), rel_mat(a.S, c.S), rel_mat(a.R, c.R)});
}

Eigen::MatrixXcd kron_all(const std::vector<Mat2>& factors) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (const Mat2& f : factors) {
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int i = 0; i < out.rows(); ++i)
      for (int k = 0; k < out.cols(); ++k) next.block(2 * i, 2 * k, 2, 2) = out(i, k) * f;
    out = std::move(next);
  }
  return out;
}

SectorRep assemble_sector(const CurvePoint& q, const DrinfeldData& dd, const std::vector<Rotation>& rots) {
  std::vector<Mat2> f, fp, r, s;
  for (int j = 0; j < dd.r; ++j) {
    f.push_back(factor_matrix(xyz(j, q, dd)));
    fp.push_back(factor_matrix(xyz_prime(j, q, dd)));
    r.push_back(rots[j].R);
    s.push_back(rots[j].S);
  }
  return {kron_all(f), kron_all(fp), kron_all(r), kron_all(s)};
}

double AssemblyResiduals::max() const {
  return std::max({factor_det, factor_square, product_spectrum, ground_element, flip_element, rot_det, rot_inverse});
}

static double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
  // greedy nearest matching, relative to each target
  double worst = 0.0;
  for (cplx t : b) {
    size_t best = 0;
    for (size_t i = 1; i < a.size(); ++i)
      if (std::abs(a[i] - t) < std::abs(a[best] - t)) best = i;
    worst = std::max(worst, rel_diff(a[best], t));
    a.erase(a.begin() + static_cast<long>(best));
  }
  return worst;
}

AssemblyResiduals assembly_check(const CurvePoint& q, const DrinfeldData& dd, const std::vector<Rotation>& rots) {
  AssemblyResiduals res;
  const int r = dd.r;
  const cplx lq = q.lambda(dd.N);
  std::vector<XYZ> f;
  for (int j = 0; j < r; ++j) {
    f.push_back(xyz(j, q, dd));
    const AB ab = ab_values(j, lq, dd);
    const Mat2 F = factor_matrix(f.back()), Fp = factor_matrix(xyz_prime(j, q, dd));
    res.factor_det = std::max(res.factor_det, rel_diff(F.determinant(), ab.A * ab.A - ab.B * ab.B));
    Eigen::ComplexEigenSolver<Mat2> es(Fp * F, false);
    std::vector<cplx> ev{es.eigenvalues()(0), es.eigenvalues()(1)};
    res.factor_square = std::max(res.factor_square,
                                 multiset_distance(ev, {(ab.A - ab.B) * (ab.A - ab.B), (ab.A + ab.B) * (ab.A + ab.B)}));
  }
  const SectorRep rep = assemble_sector(q, dd, rots);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(rep.That * rep.T, false);
  std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::vector<cplx> g2;
  for (int i = 0; i < (1 << r); ++i) {
    const cplx g = analytic_eigenvalue(pattern_from_index(i, r), lq, dd);
    g2.push_back(g * g);
  }
  res.product_spectrum = multiset_distance(ev, g2);

  const int all_minus = (1 << r) - 1;
  cplx ground = 1.0;
  for (const XYZ& s : f) ground *= s.X + s.Y;
  res.ground_element = rel_diff(rep.T(all_minus, all_minus), ground);
  for (int m = 0; m < r; ++m) {
    cplx expect = f[m].Z;
    for (int j = 0; j < r; ++j)
      if (j != m) expect *= f[j].X + f[j].Y;
    const int flipped = all_minus ^ (1 << (r - 1 - m));
    res.flip_element = std::max(res.flip_element, rel_diff(rep.T(flipped, all_minus), expect));
  }
  res.rot_det = std::max(std::abs(rep.R.determinant() - 1.0), std::abs(rep.S.determinant() - 1.0));
  res.rot_inverse = rel_mat(rep.R, rep.S.inverse().transpose());
  return res;
}

}  // namespace scp

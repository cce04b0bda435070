#include "scp/drinfeld.hpp"

#include <algorithm>
#include <cmath>

namespace scp {

SpinPattern pattern_from_index(int index, int r) {
  SpinPattern xi(r);
  for (int j = 0; j < r; ++j) xi[j] = ((index >> (r - 1 - j)) & 1) ? -1 : 1;
  return xi;
}

int pattern_index(const SpinPattern& xi) {
  int idx = 0;
  for (int v : xi) idx = 2 * idx + (v == -1 ? 1 : 0);
  return idx;
}

std::vector<std::int64_t> compute_P(int N, int L) {
  if (N < 2 || L < 1 || L % N != 0)
    throw Error(ErrorKind::Config, "compute_P: L must be a positive multiple of N >= 2");
  // coefficients of (1 + t + ... + t^{N-1})^L
  std::vector<std::int64_t> c{1};
  for (int s = 0; s < L; ++s) {
    std::vector<std::int64_t> next(c.size() + N - 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
      for (int a = 0; a < N; ++a) next[i + a] += c[i];
    c = std::move(next);
  }
  const int r = L * (N - 1) / N;
  std::vector<std::int64_t> out(r + 1);
  for (int l = 0; l <= r; ++l) out[l] = c[static_cast<size_t>(l) * N];
  return out;
}

static cplx canonical_theta(cplx th) {
  const double eps = 1e-14;
  if (th.real() < -eps || (std::abs(th.real()) <= eps && th.imag() < 0)) th = -th;
  return th;
}

DrinfeldData build_drinfeld(const ModelConfig& cfg) {
  cfg.validate();
  DrinfeldData dd;
  dd.N = cfg.N;
  dd.L = cfg.L;
  dd.r = cfg.r();
  dd.kprime = cfg.kprime;
  dd.k = cfg.k();
  dd.lambda_p = cfg.lambda_p;
  dd.p = cfg.lambda_p == 1.0 ? si_point(cfg.kprime, cfg.N)
                             : point_from_lambda(cfg.kprime, cfg.lambda_p, cfg.N);

  dd.lambda_exact = compute_P(cfg.N, cfg.L);
  for (auto v : dd.lambda_exact) dd.lambda.emplace_back(static_cast<double>(v));
  dd.roots = poly_roots(CPolynomial(dd.lambda), cfg.tol);
  const int r = dd.r;

  for (cplx z : dd.roots)
    if (std::abs(z - 1.0) < cfg.tol.pairing)
      throw Error(ErrorKind::Degenerate, "build_drinfeld: root at z = 1 makes the mode singular");

  dd.pair.assign(r, -1);
  for (int m = 0; m < r; ++m) {
    int best = 0;
    for (int l = 1; l < r; ++l)
      if (std::abs(dd.roots[m] * dd.roots[l] - 1.0) < std::abs(dd.roots[m] * dd.roots[best] - 1.0))
        best = l;
    if (std::abs(dd.roots[m] * dd.roots[best] - 1.0) > cfg.tol.pairing)
      throw Error(ErrorKind::Degenerate, "build_drinfeld: root set not closed under z -> 1/z");
    dd.pair[m] = best;
  }
  for (int m = 0; m < r; ++m)
    if (dd.pair[dd.pair[m]] != m)
      throw Error(ErrorKind::Degenerate, "build_drinfeld: pairing is not an involution");

  dd.beta = lagrange_beta(dd.roots, cfg.tol);
  for (int n = 0; n < r; ++n) dd.S.push_back(s_coeff(dd, n));
  dd.d = power_sums_inverse(dd.roots, r);

  const cplx kp = dd.kprime, k2 = dd.k * dd.k;
  const cplx tpN = std::pow(dd.p.t(), dd.N);
  for (cplx z : dd.roots) {
    const cplx c2 = (kp + 1.0 / kp - k2 * tpN * z / kp) / 2.0;
    dd.theta.push_back(canonical_theta(std::acosh(c2) / 2.0));
    if (std::abs(std::sinh(2.0 * dd.theta.back())) < 1e-12)
      throw Error(ErrorKind::Degenerate, "build_drinfeld: sinh(2 theta) vanishes");
  }
  dd.rho = std::pow(static_cast<double>(dd.N), 1.0 / (2.0 * r)) * std::sqrt(kp / k2);
  return dd;
}

cplx s_coeff(const DrinfeldData& dd, int n) {
  cplx s = 0.0;
  for (int i = 0; i < dd.r; ++i) s += std::pow(dd.roots[i], -n) * dd.beta0(i);
  return s;
}

AB ab_values(int j, cplx lambda_q, const DrinfeldData& dd) {
  return {dd.rho * std::cosh(dd.theta[j]) * (1.0 - 1.0 / lambda_q),
          dd.rho * std::sinh(dd.theta[j]) * (1.0 + 1.0 / lambda_q)};
}

AB ab_bar_values(int j, cplx lambda_q, const DrinfeldData& dd) {
  return {dd.rho * std::cosh(dd.theta[j]) * (1.0 - lambda_q),
          dd.rho * std::sinh(dd.theta[j]) * (1.0 + lambda_q)};
}

cplx analytic_eigenvalue(const SpinPattern& xi, cplx lambda_q, const DrinfeldData& dd) {
  if (static_cast<int>(xi.size()) != dd.r)
    throw Error(ErrorKind::Dimension, "analytic_eigenvalue: pattern length differs from r");
  cplx g = 1.0;
  for (int j = 0; j < dd.r; ++j) {
    const AB ab = ab_values(j, lambda_q, dd);
    g *= ab.A - static_cast<double>(xi[j]) * ab.B;
  }
  return g;
}

FunctionalResidual functional_check(const CurvePoint& q, const DrinfeldData& dd) {
  const int N = dd.N, r = dd.r;
  const cplx lam = q.lambda(N);
  const cplx tp = dd.p.t();
  cplx rhs = std::pow(tp, r * N) * static_cast<double>(N);
  const cplx u = std::pow(q.t() / tp, N);
  for (cplx z : dd.roots) rhs *= u - z;

  FunctionalResidual res;
  const SpinPattern minus(r, -1);
  const cplx ref = analytic_eigenvalue(minus, lam, dd) * analytic_eigenvalue(minus, 1.0 / lam, dd);
  res.relation = rel_diff(ref, rhs);
  for (int i = 0; i < (1 << r); ++i) {
    const SpinPattern xi = pattern_from_index(i, r);
    const cplx v = analytic_eigenvalue(xi, lam, dd) * analytic_eigenvalue(xi, 1.0 / lam, dd);
    res.pattern_deviation = std::max(res.pattern_deviation, rel_diff(v, ref));
  }
  return res;
}

DrinfeldChecks drinfeld_checks(const DrinfeldData& dd) {
  DrinfeldChecks c;
  const int r = dd.r;
  double lmax = 0.0;
  for (int n = 0; n <= r; ++n) {
    c.symmetry = std::max(c.symmetry, static_cast<double>(std::llabs(dd.lambda_exact[n] -
                                                                     dd.lambda_exact[r - n])));
    lmax = std::max(lmax, std::abs(dd.lambda[n]));
  }
  const CPolynomial P = dd.P();
  cplx prod = 1.0;
  for (int m = 0; m < r; ++m) {
    double scale = 0.0;
    for (int n = 0; n <= r; ++n) scale += std::abs(dd.lambda[n]) * std::pow(std::abs(dd.roots[m]), n);
    c.root_residual = std::max(c.root_residual, std::abs(P(dd.roots[m])) / scale);
    c.pairing = std::max(c.pairing, std::abs(dd.roots[m] * dd.roots[dd.pair[m]] - 1.0));
    prod *= -dd.roots[m];
  }
  c.product = std::abs(prod - 1.0);
  c.newton = newton_identity_check(dd.lambda, dd.roots) / lmax;
  c.vdm_rows = dd.beta.residual_rows();
  c.vdm_cols = dd.beta.residual_cols();

  // 1/P(z) = sum_n c_n z^n with Lambda_0 = 1
  std::vector<cplx> inv(r, 0.0);
  for (int n = 0; n < r; ++n) {
    cplx s = n == 0 ? cplx(1.0) : cplx(0.0);
    for (int j = 1; j <= n; ++j) s -= dd.lambda[j] * inv[n - j];
    inv[n] = s / dd.lambda[0];
  }
  for (int n = 0; n <= r - 2; ++n) c.s_series = std::max(c.s_series, std::abs(dd.S[n] - inv[n]));
  for (int n = 2 - r; n < 0; ++n) c.s_negative = std::max(c.s_negative, std::abs(s_coeff(dd, n)));

  const cplx k2 = dd.k * dd.k;
  c.rho = std::abs(dd.rho * dd.rho -
                   std::pow(static_cast<double>(dd.N), 1.0 / r) * dd.kprime / k2);
  return c;
}

}  // namespace scp

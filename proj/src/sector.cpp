#include "scp/sector.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <set>

namespace scp {

namespace {

EdgeConfig complement(const EdgeConfig& n, int N) {
  EdgeConfig out(n.size());
  for (size_t j = 0; j < n.size(); ++j) out[j] = N - 1 - n[j];
  return out;
}

int checked_index(const SectorBasis& basis, const EdgeConfig& n) {
  const int i = basis.index(n);
  if (i < 0) throw Error(ErrorKind::Dimension, "configuration outside the sector basis");
  return i;
}

}  // namespace

CVector omega_state(const SectorBasis& basis) {
  CVector v = CVector::Zero(basis.size());
  v(basis.omega_index()) = 1.0;
  return v;
}

CVector omegabar_state(const SectorBasis& basis) {
  CVector v = CVector::Zero(basis.size());
  v(basis.omegabar_index()) = 1.0;
  return v;
}

CVector eplus_omega(int m, const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis) {
  CVector v = CVector::Zero(basis.size());
  const cplx z = dd.roots[m];
  for (size_t i = 0; i < tab.confs.size(); ++i)
    v(checked_index(basis, tab.confs[i])) =
        dd.beta0(m) * z * omega_pow(dd.N, -weighted_sum(tab.confs[i])) * tab.G[i](z);
  return v;
}

CVector eminus_omegabar(int m, const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis) {
  CVector v = CVector::Zero(basis.size());
  const cplx z = dd.roots[m];
  for (size_t i = 0; i < tab.confs.size(); ++i)
    v(checked_index(basis, complement(tab.confs[i], dd.N))) = dd.beta0(m) * tab.G[i](z);
  return v;
}

CVector eminus_dual_omega(int m, const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis) {
  CVector v = CVector::Zero(basis.size());
  const cplx z = dd.roots[m];
  for (size_t i = 0; i < tab.confs.size(); ++i)
    v(checked_index(basis, tab.confs[i])) =
        -dd.beta0(m) * omega_pow(dd.N, weighted_sum(tab.confs[i])) * tab.Gbar[i](z);
  return v;
}

CVector eplus_dual_omegabar(int m, const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis) {
  CVector v = CVector::Zero(basis.size());
  const cplx z = dd.roots[m];
  for (size_t i = 0; i < tab.confs.size(); ++i)
    v(checked_index(basis, complement(tab.confs[i], dd.N))) = -dd.beta0(m) * z * tab.Gbar[i](z);
  return v;
}

double dual_gram_residual(const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis) {
  double worst = 0.0;
  for (int m = 0; m < dd.r; ++m) {
    const CVector a = eminus_dual_omega(m, dd, tab, basis);
    const CVector b = eplus_dual_omegabar(m, dd, tab, basis);
    for (int k = 0; k < dd.r; ++k) {
      const double delta = m == k ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(a.cwiseProduct(eplus_omega(k, dd, tab, basis)).sum() - delta));
      worst = std::max(worst, std::abs(b.cwiseProduct(eminus_omegabar(k, dd, tab, basis)).sum() - delta));
    }
  }
  return worst;
}

double x1_power_check(int N, int L) {
  const long long tri = static_cast<long long>(L) * (L + 1) / 2;
  return std::abs(omega_pow(N, -(N - 1) * tri) - omega_pow(N, tri));
}

CVector psi_explicit(const SpinPattern& xi, const DrinfeldData& dd, const ChargeNTable& tab,
                     const SectorBasis& basis) {
  if (static_cast<int>(xi.size()) != dd.r) throw Error(ErrorKind::Dimension, "psi_explicit: pattern length");
  std::vector<int> plus, minus;
  for (int j = 0; j < dd.r; ++j) (xi[j] == 1 ? plus : minus).push_back(j);
  if (plus.empty()) return omega_state(basis);
  if (minus.empty()) return omegabar_state(basis);
  if (plus.size() == 1) return eplus_omega(plus[0], dd, tab, basis);
  if (minus.size() == 1) return eminus_omegabar(minus[0], dd, tab, basis);
  throw Error(ErrorKind::Unsupported, "psi_explicit: pattern is two or more flips away from both extremes");
}

CMatrix psi_matrix(const DrinfeldData& dd, const ChargeNTable& tab, const SectorBasis& basis) {
  const int P = 1 << dd.r;
  CMatrix psi(basis.size(), P);
  for (int i = 0; i < P; ++i) psi.col(i) = psi_explicit(pattern_from_index(i, dd.r), dd, tab, basis);
  return psi;
}

SpectrumFrame spectrum_match(const CMatrix& That_xy, const CMatrix& T, const CurvePoint& q,
                             const DrinfeldData& dd, double gap_tol) {
  Eigen::ComplexEigenSolver<CMatrix> es(That_xy * T, false);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::NonConvergence, "spectrum_match: eigensolver failed");
  const CVector ev = es.eigenvalues();
  const int r = dd.r, P = 1 << r;
  const cplx lq = q.lambda(dd.N);

  auto nearest = [&](cplx target) {
    int best = 0;
    for (int i = 1; i < ev.size(); ++i)
      if (std::abs(ev(i) - target) < std::abs(ev(best) - target)) best = i;
    return best;
  };

  SpectrumFrame frame;
  std::vector<cplx> g2(P);
  for (int i = 0; i < P; ++i) {
    const cplx g = analytic_eigenvalue(pattern_from_index(i, r), lq, dd);
    g2[i] = g * g;
  }
  const int ground = P - 1;
  frame.c = ev(nearest(g2[ground])) / g2[ground];

  std::set<int> used;
  for (int i = 0; i < P; ++i) {
    SpectrumEntry e;
    e.xi = pattern_from_index(i, r);
    e.analytic = g2[i];
    const int idx = nearest(frame.c * g2[i]);
    e.matched = ev(idx);
    e.rel_error = rel_diff(e.matched, frame.c * g2[i]);
    frame.collision = frame.collision || !used.insert(idx).second;
    frame.max_rel_error = std::max(frame.max_rel_error, e.rel_error);
    frame.entries.push_back(e);
    for (int k = 0; k < i; ++k) frame.degenerate = frame.degenerate || rel_diff(g2[i], g2[k]) < gap_tol;
  }
  return frame;
}

double RatioResiduals::max() const {
  return std::max({forward_omega, forward_omegabar, hat_yx_omega, hat_yx_omegabar, hat_xy_omega, hat_xy_omegabar});
}

RatioResiduals ratio_checks(const CMatrix& T, const CMatrix& That_yx, const CMatrix& That_xy,
                            const CurvePoint& q, const DrinfeldData& dd, const ChargeNTable& tab,
                            const SectorBasis& basis) {
  const int N = dd.N;
  const cplx xpN = std::pow(dd.p.x, N), ypN = std::pow(dd.p.y, N);
  const cplx xqN = std::pow(q.x, N), yqN = std::pow(q.y, N);
  const CVector O = omega_state(basis), Ob = omegabar_state(basis);
  RatioResiduals res;
  for (int m = 0; m < dd.r; ++m) {
    const cplx z = dd.roots[m];
    const CVector dm = eminus_dual_omega(m, dd, tab, basis), dp = eplus_dual_omegabar(m, dd, tab, basis);
    const CVector kp = eplus_omega(m, dd, tab, basis), km = eminus_omegabar(m, dd, tab, basis);

    const cplx r1 = contracted_element(O, T, O) / contracted_element(dm, T, O);
    res.forward_omega = std::max(res.forward_omega, rel_diff(r1, (xqN - ypN * z) / (xqN - ypN)));
    const cplx r2 = contracted_element(Ob, T, Ob) / contracted_element(dp, T, Ob);
    res.forward_omegabar = std::max(res.forward_omegabar, rel_diff(r2, (xpN - yqN / z) / (xpN - yqN)));

    const cplx r3a = contracted_element(O, That_yx, O) / contracted_element(O, That_yx, kp);
    res.hat_yx_omega = std::max(res.hat_yx_omega, rel_diff(r3a, -(xpN - yqN / z) / (xpN - yqN)));
    const cplx r3b = contracted_element(Ob, That_yx, Ob) / contracted_element(Ob, That_yx, km);
    res.hat_yx_omegabar = std::max(res.hat_yx_omegabar, rel_diff(r3b, -(xqN - ypN * z) / (xqN - ypN)));

    const cplx r4a = contracted_element(O, That_xy, O) / contracted_element(O, That_xy, kp);
    res.hat_xy_omega = std::max(res.hat_xy_omega, rel_diff(r4a, -(xpN - xqN / z) / (xpN - xqN)));
    const cplx r4b = contracted_element(Ob, That_xy, Ob) / contracted_element(Ob, That_xy, km);
    res.hat_xy_omegabar = std::max(res.hat_xy_omegabar, rel_diff(r4b, -(yqN - ypN * z) / (yqN - ypN)));
  }
  return res;
}

double IntertwineResiduals::literal_max() const {
  return std::max({literal_forward, literal_hat_xy, literal_hat_yx});
}

double IntertwineResiduals::twisted_max() const {
  return std::max({twisted_forward, twisted_hat_xy, twisted_hat_yx});
}

double operator_norm(const CMatrix& M) {
  Eigen::JacobiSVD<CMatrix> svd(M);
  return svd.singularValues()(0);
}

double psi_independence(const CMatrix& psi) {
  CMatrix n = psi;
  for (int i = 0; i < n.cols(); ++i) n.col(i) /= n.col(i).norm();
  Eigen::JacobiSVD<CMatrix> svd(n);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

IntertwineResiduals intertwine_full_check(const CMatrix& T, const CMatrix& That_xy, const CMatrix& That_yx,
                                          const CurvePoint& q, const DrinfeldData& dd, const ChargeNTable& tab,
                                          const SectorBasis& basis, const std::vector<Rotation>& rots) {
  const int r = dd.r, P = 1 << r;
  const cplx lq = q.lambda(dd.N);
  const CMatrix psi = psi_matrix(dd, tab, basis);
  std::vector<Mat2> rs, ss, kinv;
  cplx ground = 1.0;
  for (int j = 0; j < r; ++j) {
    rs.push_back(rots[j].R);
    ss.push_back(rots[j].S);
    Mat2 k = Mat2::Zero();
    k(0, 0) = -1.0 / dd.roots[j];
    k(1, 1) = 1.0;
    kinv.push_back(k);
    const XYZ s = xyz(j, q, dd);
    ground *= s.X + s.Y;
  }
  const CMatrix Rrep = kron_all(rs), Srep = kron_all(ss), Kinv = kron_all(kinv);
  const double nT = operator_norm(T), nHxy = operator_norm(That_xy), nHyx = operator_norm(That_yx);

  IntertwineResiduals res;
  res.c = T(basis.omega_index(), basis.omega_index()) / ground;

  auto run = [&](const CMatrix& X, const CMatrix& Y, double& fwd, double& hxy, double& hyx) {
    for (int i = 0; i < P; ++i) {
      const SpinPattern xi = pattern_from_index(i, r);
      const cplx g = analytic_eigenvalue(xi, lq, dd), gi = analytic_eigenvalue(xi, 1.0 / lq, dd);
      const CVector x = X.col(i), y = Y.col(i);
      fwd = std::max(fwd, (T * x - g * y).norm() / (nT * x.norm()));
      hxy = std::max(hxy, (That_xy * y - g * x).norm() / (nHxy * y.norm()));
      hyx = std::max(hyx, (That_yx * y - gi * x).norm() / (nHyx * y.norm()));
    }
  };
  run(psi * Rrep, psi * Srep, res.literal_forward, res.literal_hat_xy, res.literal_hat_yx);
  run(psi * (Kinv * Rrep), res.c * (psi * Srep), res.twisted_forward, res.twisted_hat_xy, res.twisted_hat_yx);
  return res;
}

}  // namespace scp

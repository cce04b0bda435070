#include "scp/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace scp {

cplx root_of_unity(int N) {
  if (N < 2) throw Error(ErrorKind::Config, "root_of_unity: N must be >= 2");
  return std::polar(1.0, 2.0 * std::numbers::pi / N);
}

cplx omega_pow(int N, long long e) {
  long long m = e % N;
  if (m < 0) m += N;
  if (m == 0) return 1.0;
  // exact values for the quarter turns keep phases clean
  if (4 * m == N) return cplx(0, 1);
  if (2 * m == N) return -1.0;
  if (4 * m == 3 * N) return cplx(0, -1);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / N);
}

cplx omega_factorial(int n, int N) {
  if (n < 0 || n >= N)
    throw Error(ErrorKind::Config, "omega_factorial: n must lie in [0, N-1]");
  const cplx den = 1.0 - omega_pow(N, 1);
  cplx out = 1.0;
  for (int m = 1; m <= n; ++m) out *= (1.0 - omega_pow(N, m)) / den;
  return out;
}

cplx gauss_binomial(int upper, int lower, int N) {
  if (lower < 0 || lower > upper) return 0.0;
  cplx out = 1.0;
  for (int i = 1; i <= lower; ++i)
    out *= (1.0 - omega_pow(N, upper - lower + i)) / (1.0 - omega_pow(N, i));
  return out;
}

CPolynomial::CPolynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

void CPolynomial::trim() {
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
  if (c_.empty()) c_.push_back(0.0);
}

CPolynomial CPolynomial::from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (cplx z : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= z * c[i];
    }
    c = std::move(next);
  }
  return CPolynomial(std::move(c));
}

cplx CPolynomial::coeff(int n) const {
  return (n >= 0 && n < static_cast<int>(c_.size())) ? c_[n] : cplx(0.0);
}

cplx CPolynomial::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx CPolynomial::derivative(cplx z) const {
  cplx acc = 0.0;
  for (int n = degree(); n >= 1; --n) acc = acc * z + static_cast<double>(n) * c_[n];
  return acc;
}

double CPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (cplx c : c_) m = std::max(m, std::abs(c));
  return m;
}

std::vector<cplx> poly_roots(const CPolynomial& p, const Tolerances& tol) {
  const int deg = p.degree();
  if (deg < 1) throw Error(ErrorKind::Config, "poly_roots: degree must be >= 1");
  const cplx lead = p.coeff(deg);

  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -p.coeff(i) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::NonConvergence, "poly_roots: companion eigensolver failed");

  std::vector<cplx> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);

  const double scale = p.max_abs_coeff();
  for (cplx& z : roots) {
    for (int it = 0; it < 2; ++it) {
      const cplx d = p.derivative(z);
      if (d == 0.0) break;
      const cplx step = p(z) / d;
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z -= step;
    }
  }

  std::ostringstream bad;
  bool failed = false;
  for (cplx z : roots) {
    const double res = std::abs(p(z));
    const double bound = tol.root * scale * std::pow(std::max(1.0, std::abs(z)), deg);
    if (!(res <= bound)) {
      failed = true;
      bad << " |p(" << z << ")|=" << res;
    }
  }
  if (failed) throw Error(ErrorKind::NonConvergence, "poly_roots: residuals too large:" + bad.str());

  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (int i = 0; i < deg; ++i)
    for (int j = i + 1; j < deg; ++j)
      if (std::abs(roots[i] - roots[j]) < tol.pairing)
        throw Error(ErrorKind::Degenerate, "poly_roots: degenerate roots");
  return roots;
}

BetaMatrix lagrange_beta(const std::vector<cplx>& roots, const Tolerances& tol) {
  const int r = static_cast<int>(roots.size());
  BetaMatrix out;
  out.roots = roots;
  out.b.assign(r, std::vector<cplx>(r, 0.0));
  for (int j = 0; j < r; ++j) {
    std::vector<cplx> others;
    cplx den = 1.0;
    for (int l = 0; l < r; ++l) {
      if (l == j) continue;
      const cplx diff = roots[j] - roots[l];
      if (std::abs(diff) < tol.pairing)
        throw Error(ErrorKind::Degenerate, "lagrange_beta: coincident roots");
      den *= diff;
      others.push_back(roots[l]);
    }
    const CPolynomial num = CPolynomial::from_roots(others);
    for (int n = 0; n < r; ++n) out.b[j][n] = num.coeff(n) / den;
  }
  return out;
}

double BetaMatrix::residual_rows() const {
  double worst = 0.0;
  for (int j = 0; j < r(); ++j)
    for (int k = 0; k < r(); ++k) {
      cplx s = 0.0, zp = 1.0;
      for (int n = 0; n < r(); ++n, zp *= roots[k]) s += b[j][n] * zp;
      worst = std::max(worst, std::abs(s - (j == k ? 1.0 : 0.0)));
    }
  return worst;
}

double BetaMatrix::residual_cols() const {
  double worst = 0.0;
  for (int n = 0; n < r(); ++n)
    for (int m = 0; m < r(); ++m) {
      cplx s = 0.0;
      for (int k = 0; k < r(); ++k) s += std::pow(roots[k], n) * b[k][m];
      worst = std::max(worst, std::abs(s - (n == m ? 1.0 : 0.0)));
    }
  return worst;
}

std::vector<cplx> power_sums_inverse(const std::vector<cplx>& roots, int count) {
  std::vector<cplx> d(count + 1, 0.0);
  for (int n = 1; n <= count; ++n)
    for (cplx z : roots) d[n] -= std::pow(1.0 / z, n);
  return d;
}

double newton_identity_check(const std::vector<cplx>& lambda, const std::vector<cplx>& roots) {
  const int r = static_cast<int>(roots.size());
  const auto d = power_sums_inverse(roots, r);
  double worst = 0.0;
  for (int n = 1; n <= r; ++n) {
    cplx s = static_cast<double>(n) * lambda[n];
    for (int j = 1; j <= n; ++j) s -= d[j] * lambda[n - j];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace scp

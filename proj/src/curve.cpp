#include "scp/curve.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "scp/numerics.hpp"

namespace scp {

cplx ModelConfig::k() const { return std::sqrt(1.0 - kprime * kprime); }

void ModelConfig::validate(long long size_cap) const {
  if (N < 2) throw Error(ErrorKind::Config, "N must be >= 2");
  if (L < 1 || L % N != 0) throw Error(ErrorKind::Config, "L must be a positive multiple of N");
  if (r() < 1) throw Error(ErrorKind::Config, "r = L(N-1)/N must be positive");
  if (std::abs(kprime) < 1e-12) throw Error(ErrorKind::Config, "k' must be nonzero");
  if (std::abs(k()) < 1e-12) throw Error(ErrorKind::Config, "k' = +-1 gives k = 0");
  if (std::abs(lambda_p) < 1e-12) throw Error(ErrorKind::Config, "lambda_p must be nonzero");
  long long size = 1;
  for (int i = 0; i < L - 1; ++i) {
    size *= N;
    if (size > size_cap) {
      std::ostringstream os;
      os << "sector size N^(L-1) exceeds the cap of " << size_cap << " states";
      throw Error(ErrorKind::Config, os.str());
    }
  }
}

cplx CurvePoint::lambda(int N) const { return std::pow(mu, N); }

CurvePoint si_point(cplx kprime, int N) {
  const cplx k = std::sqrt(1.0 - kprime * kprime);
  if (std::abs(k) < 1e-12) throw Error(ErrorKind::Config, "si_point: k' = +-1 gives k = 0");
  if (std::abs(kprime) < 1e-12) throw Error(ErrorKind::Config, "si_point: k' must be nonzero");
  const cplx x = std::pow((1.0 - kprime) / k, 1.0 / N);
  return {x, x, 1.0};
}

CurvePoint point_from_lambda(cplx kprime, cplx lambda, int N) {
  if (std::abs(lambda) < 1e-300) throw Error(ErrorKind::Singular, "point_from_lambda: lambda = 0");
  const cplx k = std::sqrt(1.0 - kprime * kprime);
  if (std::abs(k) < 1e-12) throw Error(ErrorKind::Config, "point_from_lambda: k = 0");
  const cplx xn = (1.0 - kprime / lambda) / k;
  const cplx yn = (1.0 - kprime * lambda) / k;
  if (std::abs(xn) < 1e-14) throw Error(ErrorKind::Singular, "point_from_lambda: 1 - k'/lambda vanishes");
  if (std::abs(yn) < 1e-14) throw Error(ErrorKind::Singular, "point_from_lambda: 1 - k' lambda vanishes");
  if (lambda == 1.0) return si_point(kprime, N);
  return {std::pow(xn, 1.0 / N), std::pow(yn, 1.0 / N), std::pow(lambda, 1.0 / N)};
}

double curve_residual(const CurvePoint& p, cplx kprime, int N) {
  const cplx k = std::sqrt(1.0 - kprime * kprime);
  const cplx lam = p.lambda(N);
  const double r1 = std::abs(k * std::pow(p.x, N) - 1.0 + kprime / lam);
  const double r2 = std::abs(k * std::pow(p.y, N) - 1.0 + kprime * lam);
  const double r3 = std::abs(k * k * std::pow(p.t(), N) - 1.0 - kprime * kprime +
                             kprime * (lam + 1.0 / lam));
  return std::max({r1, r2, r3});
}

cplx weight_W(const CurvePoint& p, const CurvePoint& q, int n, int N) {
  cplx out = std::pow(p.mu / q.mu, n);
  for (int j = 1; j <= n; ++j) {
    const cplx w = omega_pow(N, j);
    const cplx den = p.y - q.x * w;
    if (std::abs(den) < 1e-14) {
      std::ostringstream os;
      os << "weight_W: y_p - x_q w^" << j << " vanishes";
      throw Error(ErrorKind::Singular, os.str());
    }
    out *= (q.y - p.x * w) / den;
  }
  return out;
}

cplx weight_Wbar(const CurvePoint& p, const CurvePoint& q, int n, int N) {
  cplx out = std::pow(q.mu / p.mu, n);
  const cplx w1 = omega_pow(N, 1);
  for (int j = 1; j <= n; ++j) {
    const cplx w = omega_pow(N, j);
    const cplx den = q.y - p.x * w;
    if (std::abs(den) < 1e-14) {
      std::ostringstream os;
      os << "weight_Wbar: y_q - x_p w^" << j << " vanishes";
      throw Error(ErrorKind::Singular, os.str());
    }
    out *= (w1 * p.y - q.x * w) / den;
  }
  return out;
}

PeriodicityResidual weight_periodicity_check(const CurvePoint& p, const CurvePoint& q, int N) {
  PeriodicityResidual res;
  res.w = std::abs(weight_W(p, q, N, N) / weight_W(p, q, 0, N) - 1.0);
  res.wbar = std::abs(weight_Wbar(p, q, N, N) / weight_Wbar(p, q, 0, N) - 1.0);
  return res;
}

double min_denominator(const CurvePoint& p, const CurvePoint& q, int N) {
  double m = std::numeric_limits<double>::infinity();
  for (int a = 0; a < N; ++a) {
    const cplx w = omega_pow(N, a);
    m = std::min({m, std::abs(p.y - q.x * w), std::abs(p.x - q.y * w), std::abs(p.x - q.x * w),
                  std::abs(q.y - p.x * w)});
  }
  return m;
}

std::vector<CurvePoint> sample_q_points(const ModelConfig& cfg, const CurvePoint& p, int count,
                                        std::mt19937_64& rng,
                                        const std::function<bool(const CurvePoint&)>& accept) {
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const cplx kp = cfg.kprime;
  const cplx avoid[] = {0.0, kp, 1.0 / kp};
  const cplx unit[] = {1.0, -1.0};  // lambda = +-1 collapses eigenvalue pairs

  std::vector<CurvePoint> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 100000)
      throw Error(ErrorKind::NonConvergence, "sample_q_points: could not find admissible samples");
    const cplx lam = std::polar(radius(rng), angle(rng));
    bool near = false;
    for (cplx c : avoid) near = near || std::abs(lam - c) < 1e-3;
    for (cplx c : unit) near = near || std::abs(lam - c) < 0.05;
    if (near) continue;
    const CurvePoint q = point_from_lambda(kp, lam, cfg.N);
    if (min_denominator(p, q, cfg.N) < 1e-3) continue;
    if (accept && !accept(q)) continue;
    out.push_back(q);
  }
  return out;
}

}  // namespace scp

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "scp/common.hpp"

namespace scp {

struct ModelConfig {
  int N = 3;
  int L = 3;
  int Q = 0;
  cplx kprime = 0.3;
  cplx lambda_p = 1.0;
  Tolerances tol;
  std::uint64_t seed = 42;

  int r() const { return L * (N - 1) / N; }
  /// principal square root of 1 - k'^2
  cplx k() const;
  /// Throws ErrorKind::Config naming the violated constraint.
  void validate(long long size_cap = 100000) const;
};

/// A rapidity on the curve k x^N = 1 - k'/lambda, k y^N = 1 - k' lambda.
struct CurvePoint {
  cplx x, y, mu;

  cplx lambda(int N) const;
  cplx t() const { return x * y; }
  /// (y, x, 1/mu): lies on the same curve with lambda -> 1/lambda.
  CurvePoint swapped() const { return {y, x, 1.0 / mu}; }
};

CurvePoint si_point(cplx kprime, int N);
CurvePoint point_from_lambda(cplx kprime, cplx lambda, int N);

/// max of |k x^N - 1 + k'/lambda|, |k y^N - 1 + k' lambda| and the t^N identity.
double curve_residual(const CurvePoint& p, cplx kprime, int N);

/// W_pq(n) = (mu_p/mu_q)^n prod_{j=1}^n (y_q - x_p w^j)/(y_p - x_q w^j)
cplx weight_W(const CurvePoint& p, const CurvePoint& q, int n, int N);
/// Wbar_p'q(n) = (mu_q/mu_p)^n prod_{j=1}^n (w y_p - x_q w^j)/(y_q - x_p w^j)
cplx weight_Wbar(const CurvePoint& p, const CurvePoint& q, int n, int N);

struct PeriodicityResidual {
  double w = 0.0;
  double wbar = 0.0;
  double max() const { return std::max(w, wbar); }
};

/// |W(N)/W(0) - 1| and |Wbar(N)/Wbar(0) - 1|.
PeriodicityResidual weight_periodicity_check(const CurvePoint& p, const CurvePoint& q, int N);

/// Smallest |y_p - x_q w^a|, |x_p - y_q w^a|, |x_p - x_q w^a| over a: the
/// denominators met by the transfer matrices and their closed forms.
double min_denominator(const CurvePoint& p, const CurvePoint& q, int N);

/// Seeded horizontal rapidities with 0.5 <= |lambda| <= 2, away from
/// {0, k', 1/k', 1, -1} and from vanishing denominators. `accept` may veto
/// further samples (eigenvalue gaps, say).
std::vector<CurvePoint> sample_q_points(const ModelConfig& cfg, const CurvePoint& p, int count,
                                        std::mt19937_64& rng,
                                        const std::function<bool(const CurvePoint&)>& accept = {});

}  // namespace scp

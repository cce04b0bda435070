#pragma once

#include <cstdint>
#include <vector>

#include "scp/curve.hpp"
#include "scp/numerics.hpp"

namespace scp {

/// xi_j in {+1, -1}; mode 0 is the most significant bit of a pattern index,
/// bit value 0 meaning xi = +1.
using SpinPattern = std::vector<int>;

SpinPattern pattern_from_index(int index, int r);
int pattern_index(const SpinPattern& xi);

/// Lambda_l = number of L-compositions of lN with parts <= N-1, l = 0..r.
std::vector<std::int64_t> compute_P(int N, int L);

struct DrinfeldData {
  int N = 0, L = 0, r = 0;
  cplx kprime, k, lambda_p;
  CurvePoint p;

  std::vector<std::int64_t> lambda_exact;
  std::vector<cplx> lambda;  // complex mirror
  std::vector<cplx> roots;   // sorted by (re, im)
  std::vector<int> pair;     // z[pair[m]] * z[m] = 1
  BetaMatrix beta;
  std::vector<cplx> S;       // S_n, n = 0..r-1
  std::vector<cplx> theta;   // canonical: Re >= 0, Im >= 0 on ties
  cplx rho;
  std::vector<cplx> d;       // d_n, n = 1..r (index 0 unused)

  CPolynomial P() const { return CPolynomial(lambda); }
  cplx beta0(int j) const { return beta(j, 0); }
};

/// Throws Degenerate for repeated roots or a root at z = 1. A root at
/// z = -1 (always present for odd r) is its own partner.
DrinfeldData build_drinfeld(const ModelConfig& cfg);

/// S_n = sum_i z_i^{-n} beta_{i,0} for any integer n.
cplx s_coeff(const DrinfeldData& dd, int n);

struct AB {
  cplx A, B;
};

/// A_j = rho cosh(theta_j)(1 - 1/lambda_q), B_j = rho sinh(theta_j)(1 + 1/lambda_q).
AB ab_values(int j, cplx lambda_q, const DrinfeldData& dd);
/// Same with 1/lambda_q replaced by lambda_q.
AB ab_bar_values(int j, cplx lambda_q, const DrinfeldData& dd);

/// prod_j (A_j - xi_j B_j)
cplx analytic_eigenvalue(const SpinPattern& xi, cplx lambda_q, const DrinfeldData& dd);

struct FunctionalResidual {
  double relation = 0.0;            // relative, all-minus pattern
  double pattern_deviation = 0.0;   // max relative spread over patterns
};

/// G(lambda) G(1/lambda) = t_p^{rN} N prod_j ((t_q/t_p)^N - z_j).
FunctionalResidual functional_check(const CurvePoint& q, const DrinfeldData& dd);

struct DrinfeldChecks {
  double symmetry = 0.0;       // max |Lambda_n - Lambda_{r-n}|, exact integers
  double root_residual = 0.0;  // max |P(z)| / sum |Lambda_n| |z|^n
  double pairing = 0.0;        // max |z_m z_m* - 1|
  double product = 0.0;        // |prod(-z) - 1|
  double newton = 0.0;         // Newton identities, relative to max|Lambda|
  double vdm_rows = 0.0, vdm_cols = 0.0;
  double s_series = 0.0;       // S_n vs power series of 1/P through order r-2
  double s_negative = 0.0;     // max |S_n| for 1-r < n < 0
  double rho = 0.0;            // |rho^2 - N^{1/r} k'/k^2|
};

DrinfeldChecks drinfeld_checks(const DrinfeldData& dd);

}  // namespace scp

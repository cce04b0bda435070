#pragma once

#include <cstdint>
#include <vector>

#include "scp/common.hpp"

namespace scp {

/// omega = exp(2 pi i / N).
cplx root_of_unity(int N);

/// omega^e for any integer e, reduced mod N before evaluation.
cplx omega_pow(int N, long long e);

/// [n]! = prod_{m=1}^n (1 - omega^m)/(1 - omega). Requires 0 <= n <= N-1.
cplx omega_factorial(int n, int N);

/// Omega-binomial [upper over lower] in product form. Out-of-range lower
/// index yields 0 rather than throwing.
cplx gauss_binomial(int upper, int lower, int N);

class CPolynomial {
 public:
  CPolynomial() = default;
  explicit CPolynomial(std::vector<cplx> coeffs);

  /// Monic polynomial prod_i (z - roots[i]).
  static CPolynomial from_roots(const std::vector<cplx>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx coeff(int n) const;
  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;
  double max_abs_coeff() const;

 private:
  void trim();
  std::vector<cplx> c_;  // ascending degree
};

/// Roots from companion-matrix eigenvalues, Newton polished, sorted by (re, im).
/// Throws NonConvergence if a root misses tol.root, Degenerate if two roots
/// are closer than tol.pairing.
std::vector<cplx> poly_roots(const CPolynomial& p, const Tolerances& tol = {});

struct BetaMatrix {
  std::vector<cplx> roots;
  std::vector<std::vector<cplx>> b;  // b[j][n], j in [0,r), n in [0,r)

  int r() const { return static_cast<int>(roots.size()); }
  cplx operator()(int j, int n) const { return b[j][n]; }
  /// max |sum_n b[j][n] z_k^n - delta_jk|
  double residual_rows() const;
  /// max |sum_k z_k^n b[k][m] - delta_nm|
  double residual_cols() const;
};

BetaMatrix lagrange_beta(const std::vector<cplx>& roots, const Tolerances& tol = {});

/// Power sums d_n = -sum_j z_j^{-n}, n = 1..count (index 0 unused).
std::vector<cplx> power_sums_inverse(const std::vector<cplx>& roots, int count);

/// max_n |n Lambda_n - sum_{j=1}^n d_j Lambda_{n-j}| over n = 1..r.
double newton_identity_check(const std::vector<cplx>& lambda, const std::vector<cplx>& roots);

}  // namespace scp

#pragma once

#include <vector>

#include "scp/drinfeld.hpp"
#include "scp/numerics.hpp"

namespace scp {

/// Edge configuration n_1..n_L with 0 <= n_j <= N-1.
using EdgeConfig = std::vector<int>;

enum class GKind { Forward, Bar };

/// N_j = sum_{l<j} n_l (index j = 0..L-1).
std::vector<int> prefix_sums(const EdgeConfig& n);
/// Nbar_j = sum_{l>j} n_l.
std::vector<int> suffix_sums(const EdgeConfig& n);
int charge(const EdgeConfig& n);
/// sum_j j n_j with 1-based j.
long long weighted_sum(const EdgeConfig& n);

/// All configurations with entries <= N-1 and the given total, lexicographic.
std::vector<EdgeConfig> configs_with_charge(int N, int L, int total);

/// K_m = sum over n' (sum n' = m, n'_j <= N-1) of prod_j [n_j+n'_j over n'_j] w^{n'_j N_j},
/// by backtracking. Bar kind uses the suffix sums instead.
cplx k_coeff(const EdgeConfig& conf, int m, int N, GKind kind = GKind::Forward);

/// g(t) = (1 - t^N)^{-c} prod_j (1 - t^N)/(1 - t w^{N_j}) for charge cN.
cplx gen_function(const EdgeConfig& conf, cplx t, int N, GKind kind = GKind::Forward);

/// Taylor coefficients of gen_function through t^order, expanded factor by factor.
std::vector<cplx> gen_function_series(const EdgeConfig& conf, int order, int N,
                                      GKind kind = GKind::Forward);

/// G_0(conf, z) = sum_{l=0}^{r-1} K_{lN} z^l for charge N; for charge 0 the
/// sum runs to l = r, which reproduces P(z) for the zero configuration.
CPolynomial g_poly(int Q, const EdgeConfig& conf, GKind kind, int N);

/// (1/N) sum_a (1-t^N)^{-1} prod_j (1-t^N)/(1 - t w^{a+N_j}): equals G(conf, t^N)
/// for charge N and P(t^N)/(1 - t^N) for the zero configuration.
cplx g_closed(const EdgeConfig& conf, cplx t, int N, GKind kind = GKind::Forward);

/// The charge-N configurations together with their G and Gbar polynomials.
struct ChargeNTable {
  int N = 0, L = 0;
  std::vector<EdgeConfig> confs;
  std::vector<CPolynomial> G, Gbar;
};

ChargeNTable build_charge_n_table(int N, int L);

/// forward: sum_conf Gbar(conf, z_k) G(conf, z); bar: sum_conf Gbar(conf, z) G(conf, z_k).
CPolynomial h_poly(int k, const DrinfeldData& dd, const ChargeNTable& tab, GKind kind);

/// max coefficient deviation of h_poly from beta_{k,0}^{-1} prod_{l != k}(z - z_l),
/// relative to the largest target coefficient, over both kinds and every k.
double h_identity_residual(const DrinfeldData& dd, const ChargeNTable& tab);

/// beta_{m,0} beta_{k,0} z_k sum_conf Gbar(conf, z_m) G(conf, z_k) + delta_mk, max entry.
double gram_check(const DrinfeldData& dd, const ChargeNTable& tab);

struct LeadingCoeffResidual {
  // both relative
  double polynomial = 0.0;  // z^{r-1} coefficient of hbar_k vs 1/beta_{k,0}
  double direct = 0.0;      // -sum_conf w^{-sum j n_j} G(conf, z_k) vs 1/beta_{k,0}
};

LeadingCoeffResidual leading_coeff_check(const DrinfeldData& dd, const ChargeNTable& tab);

}  // namespace scp

#include "scp/gfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scp {

std::vector<int> prefix_sums(const EdgeConfig& n) {
  std::vector<int> out(n.size(), 0);
  for (size_t j = 1; j < n.size(); ++j) out[j] = out[j - 1] + n[j - 1];
  return out;
}

std::vector<int> suffix_sums(const EdgeConfig& n) {
  std::vector<int> out(n.size(), 0);
  for (size_t j = n.size(); j-- > 1;) out[j - 1] = out[j] + n[j];
  return out;
}

int charge(const EdgeConfig& n) { return std::accumulate(n.begin(), n.end(), 0); }

long long weighted_sum(const EdgeConfig& n) {
  long long s = 0;
  for (size_t j = 0; j < n.size(); ++j) s += static_cast<long long>(j + 1) * n[j];
  return s;
}

std::vector<EdgeConfig> configs_with_charge(int N, int L, int total) {
  std::vector<EdgeConfig> out;
  EdgeConfig cur(L, 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == L) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int cap = (N - 1) * (L - j - 1);
    for (int v = 0; v <= std::min(N - 1, left); ++v) {
      if (left - v > cap) continue;
      cur[j] = v;
      self(self, j + 1, left - v);
    }
    cur[j] = 0;
  };
  rec(rec, 0, total);
  return out;
}

static std::vector<int> phase_sums(const EdgeConfig& conf, GKind kind) {
  return kind == GKind::Forward ? prefix_sums(conf) : suffix_sums(conf);
}

cplx k_coeff(const EdgeConfig& conf, int m, int N, GKind kind) {
  const int L = static_cast<int>(conf.size());
  if (m < 0 || m > (N - 1) * L) return 0.0;
  const auto Nj = phase_sums(conf, kind);

  // per-site weights for every n'_j
  std::vector<std::vector<cplx>> site(L, std::vector<cplx>(N));
  for (int j = 0; j < L; ++j)
    for (int v = 0; v < N; ++v)
      site[j][v] = gauss_binomial(conf[j] + v, v, N) * omega_pow(N, static_cast<long long>(v) * Nj[j]);

  cplx total = 0.0;
  auto rec = [&](auto&& self, int j, int left, cplx acc) -> void {
    if (j == L) {
      if (left == 0) total += acc;
      return;
    }
    const int cap = (N - 1) * (L - j - 1);
    for (int v = 0; v <= std::min(N - 1, left); ++v) {
      if (left - v > cap) continue;
      self(self, j + 1, left - v, acc * site[j][v]);
    }
  };
  rec(rec, 0, m, cplx(1.0));
  return total;
}

cplx gen_function(const EdgeConfig& conf, cplx t, int N, GKind kind) {
  const int c = charge(conf);
  if (c % N != 0) throw Error(ErrorKind::Unsupported, "gen_function: charge must be a multiple of N");
  const auto Nj = phase_sums(conf, kind);
  const cplx tN = std::pow(t, N);
  cplx g = std::pow(1.0 - tN, -(c / N));
  for (int v : Nj) {
    const cplx den = 1.0 - t * omega_pow(N, v);
    if (std::abs(den) < 1e-12) throw Error(ErrorKind::Singular, "gen_function: t sits on a pole");
    g *= (1.0 - tN) / den;
  }
  return g;
}

std::vector<cplx> gen_function_series(const EdgeConfig& conf, int order, int N, GKind kind) {
  const int c = charge(conf);
  if (c % N != 0) throw Error(ErrorKind::Unsupported, "gen_function_series: charge must be a multiple of N");
  const auto Nj = phase_sums(conf, kind);
  auto mul = [order](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(order + 1, 0.0);
    for (int i = 0; i <= order; ++i)
      if (a[i] != 0.0)
        for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  std::vector<cplx> acc(order + 1, 0.0);
  acc[0] = 1.0;
  for (int v : Nj) {
    // (1 - t^N) / (1 - w t) = sum_i w^i t^i - sum_i w^i t^{i+N}
    const cplx w = omega_pow(N, v);
    std::vector<cplx> f(order + 1, 0.0);
    cplx wi = 1.0;
    for (int i = 0; i <= order; ++i, wi *= w) {
      f[i] += wi;
      if (i + N <= order) f[i + N] -= wi;
    }
    acc = mul(acc, f);
  }
  // (1 - t^N)^{-k} = sum_s binom(s+k-1, s) t^{sN}
  const int kk = c / N;
  std::vector<cplx> inv(order + 1, 0.0);
  for (int s = 0; s * N <= order; ++s) {
    double b = 1.0;
    for (int i = 1; i <= s; ++i) b = b * (kk - 1 + i) / i;
    inv[s * N] = kk == 0 ? (s == 0 ? 1.0 : 0.0) : b;
  }
  return mul(acc, inv);
}

CPolynomial g_poly(int Q, const EdgeConfig& conf, GKind kind, int N) {
  if (Q != 0) throw Error(ErrorKind::Unsupported, "g_poly: only the Q = 0 sector is implemented");
  const int L = static_cast<int>(conf.size());
  const int r = L * (N - 1) / N;
  const int c = charge(conf);
  int terms;
  if (c == N) terms = r;
  else if (c == 0) terms = r + 1;
  else throw Error(ErrorKind::Unsupported, "g_poly: charge must be 0 or N");
  std::vector<cplx> coeffs(terms);
  for (int l = 0; l < terms; ++l) coeffs[l] = k_coeff(conf, l * N, N, kind);
  return CPolynomial(std::move(coeffs));
}

cplx g_closed(const EdgeConfig& conf, cplx t, int N, GKind kind) {
  const int c = charge(conf);
  if (c != 0 && c != N) throw Error(ErrorKind::Unsupported, "g_closed: charge must be 0 or N");
  const auto Nj = phase_sums(conf, kind);
  const cplx tN = std::pow(t, N);
  if (std::abs(1.0 - tN) < 1e-12) throw Error(ErrorKind::Singular, "g_closed: t^N = 1");
  cplx sum = 0.0;
  for (int a = 0; a < N; ++a) {
    cplx prod = 1.0 / (1.0 - tN);
    for (int v : Nj) {
      const cplx den = 1.0 - t * omega_pow(N, a + v);
      if (std::abs(den) < 1e-12) throw Error(ErrorKind::Singular, "g_closed: t sits on a pole");
      prod *= (1.0 - tN) / den;
    }
    sum += prod;
  }
  return sum / static_cast<double>(N);
}

ChargeNTable build_charge_n_table(int N, int L) {
  ChargeNTable tab;
  tab.N = N;
  tab.L = L;
  tab.confs = configs_with_charge(N, L, N);
  for (const auto& c : tab.confs) {
    tab.G.push_back(g_poly(0, c, GKind::Forward, N));
    tab.Gbar.push_back(g_poly(0, c, GKind::Bar, N));
  }
  return tab;
}

static std::vector<cplx> padded(const CPolynomial& p, int size) {
  std::vector<cplx> out(size, 0.0);
  for (int i = 0; i <= p.degree() && i < size; ++i) out[i] = p.coeff(i);
  return out;
}

CPolynomial h_poly(int k, const DrinfeldData& dd, const ChargeNTable& tab, GKind kind) {
  const int r = dd.r;
  const cplx zk = dd.roots[k];
  std::vector<cplx> acc(r, 0.0);
  for (size_t i = 0; i < tab.confs.size(); ++i) {
    const CPolynomial& varying = kind == GKind::Forward ? tab.G[i] : tab.Gbar[i];
    const cplx fixed = kind == GKind::Forward ? tab.Gbar[i](zk) : tab.G[i](zk);
    const auto c = padded(varying, r);
    for (int n = 0; n < r; ++n) acc[n] += fixed * c[n];
  }
  return CPolynomial(std::move(acc));
}

double h_identity_residual(const DrinfeldData& dd, const ChargeNTable& tab) {
  double worst = 0.0;
  for (int k = 0; k < dd.r; ++k) {
    std::vector<cplx> others;
    for (int l = 0; l < dd.r; ++l)
      if (l != k) others.push_back(dd.roots[l]);
    const auto target = padded(CPolynomial::from_roots(others), dd.r);
    for (GKind kind : {GKind::Forward, GKind::Bar}) {
      const auto h = padded(h_poly(k, dd, tab, kind), dd.r);
      double scale = 0.0;
      for (int n = 0; n < dd.r; ++n) scale = std::max(scale, std::abs(target[n] / dd.beta0(k)));
      for (int n = 0; n < dd.r; ++n)
        worst = std::max(worst, std::abs(h[n] - target[n] / dd.beta0(k)) / scale);
    }
  }
  return worst;
}

double gram_check(const DrinfeldData& dd, const ChargeNTable& tab) {
  double worst = 0.0;
  for (int m = 0; m < dd.r; ++m)
    for (int k = 0; k < dd.r; ++k) {
      cplx s = 0.0;
      for (size_t i = 0; i < tab.confs.size(); ++i) s += tab.Gbar[i](dd.roots[m]) * tab.G[i](dd.roots[k]);
      const cplx g = dd.beta0(m) * dd.beta0(k) * dd.roots[k] * s;
      worst = std::max(worst, std::abs(g + (m == k ? 1.0 : 0.0)));
    }
  return worst;
}

LeadingCoeffResidual leading_coeff_check(const DrinfeldData& dd, const ChargeNTable& tab) {
  LeadingCoeffResidual res;
  for (int k = 0; k < dd.r; ++k) {
    const cplx target = 1.0 / dd.beta0(k);
    const auto h = padded(h_poly(k, dd, tab, GKind::Bar), dd.r);
    res.polynomial = std::max(res.polynomial, rel_diff(h[dd.r - 1], target));
    cplx s = 0.0;
    for (size_t i = 0; i < tab.confs.size(); ++i)
      s += omega_pow(dd.N, -weighted_sum(tab.confs[i])) * tab.G[i](dd.roots[k]);
    res.direct = std::max(res.direct, rel_diff(-s, target));
  }
  return res;
}

}  // namespace scp

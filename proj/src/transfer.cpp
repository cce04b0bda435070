#include "scp/transfer.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "scp/numerics.hpp"
#include "scp/parallel.hpp"

namespace scp {

namespace {

long long code_of(const EdgeConfig& n, int N) {
  long long c = 0;
  for (int v : n) c = c * N + v;
  return c;
}

// (N_j mod N) for j = 0..L, so entry L is the total charge mod N
std::vector<std::vector<int>> prefix_mod_table(const SectorBasis& b) {
  std::vector<std::vector<int>> out(b.size(), std::vector<int>(b.L + 1, 0));
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.L; ++j) out[i][j + 1] = (out[i][j] + b.confs[i][j]) % b.N;
  return out;
}

void check_denominator(cplx d, const char* what) {
  if (std::abs(d) < 1e-14) throw Error(ErrorKind::Singular, std::string(what) + " vanishes");
}

}  // namespace

int SectorBasis::index(const EdgeConfig& n) const {
  if (static_cast<int>(n.size()) != L) return -1;
  for (int v : n)
    if (v < 0 || v >= N) return -1;
  return lookup_[code_of(n, N)];
}

int SectorBasis::omega_index() const { return index(EdgeConfig(L, 0)); }
int SectorBasis::omegabar_index() const { return index(EdgeConfig(L, N - 1)); }

SectorBasis enumerate_basis(int N, int L, long long cap) {
  if (N < 2 || L < 1 || L % N != 0)
    throw Error(ErrorKind::Config, "enumerate_basis: L must be a positive multiple of N >= 2");
  long long full = 1;
  for (int i = 0; i < L; ++i) full *= N;
  if (full / N > cap) throw Error(ErrorKind::Config, "enumerate_basis: sector size exceeds the cap");
  SectorBasis b;
  b.N = N;
  b.L = L;
  b.lookup_.assign(full, -1);
  EdgeConfig cur(L, 0);
  for (long long c = 0; c < full; ++c) {
    long long rem = c;
    int s = 0;
    for (int j = L - 1; j >= 0; --j) {
      cur[j] = static_cast<int>(rem % N);
      rem /= N;
      s += cur[j];
    }
    if (s % N == 0) {
      b.lookup_[c] = b.size();
      b.confs.push_back(cur);
    }
  }
  return b;
}

CMatrix build_T(int Q, const CurvePoint& p, const CurvePoint& q, const SectorBasis& basis, int jobs) {
  const int N = basis.N, L = basis.L, D = basis.size();
  const cplx num = std::pow(p.y, N) - std::pow(q.x, N);
  const cplx ratio = p.mu / q.mu;

  // F[c][n]: site factor with phase w^c and n_j = n
  std::vector<std::vector<cplx>> F(N, std::vector<cplx>(N));
  for (int c = 0; c < N; ++c) {
    const cplx den = p.y - q.x * omega_pow(N, c);
    check_denominator(den, "build_T: y_p - x_q w^c");
    cplx f = num * omega_pow(N, c) / den;
    for (int n = 0; n < N; ++n) {
      if (n > 0) {
        const cplx d = p.y - q.x * omega_pow(N, n + c);
        check_denominator(d, "build_T: y_p - x_q w^(l+c)");
        f *= ratio * (q.y - p.x * omega_pow(N, n + c)) / d;
      }
      F[c][n] = f;
    }
  }

  const auto pre = prefix_mod_table(basis);
  const double norm = std::pow(static_cast<double>(N), -0.5 * L);
  CMatrix T(D, D);
  parallel_for(D, jobs, [&](int row) {
    const auto& Np = pre[row];
    for (int col = 0; col < D; ++col) {
      const auto& n = basis.confs[col];
      const auto& Nn = pre[col];
      cplx s = 0.0;
      for (int a = 0; a < N; ++a) {
        cplx prod = 1.0;
        for (int j = 0; j < L; ++j) {
          const int c = ((a - Nn[j + 1] + Np[j]) % N + N) % N;
          prod *= F[c][n[j]];
        }
        s += omega_pow(N, -static_cast<long long>(Q) * a) * prod;
      }
      T(row, col) = norm * s;
    }
  });
  return T;
}

CMatrix build_That(int Q, const CurvePoint& p, const CurvePoint& q0, const SectorBasis& basis,
                   HatOrder order, int jobs) {
  const CurvePoint q = order == HatOrder::YX ? q0 : q0.swapped();
  const int N = basis.N, L = basis.L, D = basis.size();
  const cplx num = std::pow(p.x, N) - std::pow(q.y, N);
  const cplx ratio = q.mu / p.mu;

  // F[c][n']: site factor with phase w^c and n'_j = n'
  std::vector<std::vector<cplx>> F(N, std::vector<cplx>(N));
  for (int c = 0; c < N; ++c) {
    const cplx den = p.x - q.y * omega_pow(N, c);
    check_denominator(den, "build_That: x_p - y_q w^c");
    cplx f = num * omega_pow(N, c) / den;
    for (int n = 0; n < N; ++n) {
      if (n > 0) {
        const cplx d = p.x - q.y * omega_pow(N, n + c);
        check_denominator(d, "build_That: x_p - y_q w^(l+c)");
        f *= ratio * (q.x - p.y * omega_pow(N, n + c)) / d;
      }
      F[c][n] = f;
    }
  }

  const auto pre = prefix_mod_table(basis);
  const double norm = std::pow(static_cast<double>(N), -0.5 * L);
  CMatrix T(D, D);
  parallel_for(D, jobs, [&](int row) {
    const auto& np = basis.confs[row];
    const auto& Np = pre[row];
    for (int col = 0; col < D; ++col) {
      const auto& Nn = pre[col];
      cplx s = 0.0;
      for (int a = 0; a < N; ++a) {
        cplx prod = 1.0;
        for (int j = 0; j < L; ++j) {
          const int c = ((a - Nn[j] + Np[j]) % N + N) % N;
          prod *= F[c][np[j]];
        }
        s += omega_pow(N, -static_cast<long long>(Q) * a) * prod;
      }
      T(row, col) = norm * s;
    }
  });
  return T;
}

CMatrix build_physical_T(int Q, const CurvePoint& p, const CurvePoint& q, const SectorBasis& basis) {
  const int N = basis.N, L = basis.L, D = basis.size();
  std::vector<cplx> W(N), Wb(N);
  for (int n = 0; n < N; ++n) {
    W[n] = weight_W(p, q, n, N);
    Wb[n] = weight_Wbar(p, q, n, N);
  }
  const auto pre = prefix_mod_table(basis);
  CMatrix T(D, D);
  for (int row = 0; row < D; ++row)
    for (int col = 0; col < D; ++col) {
      cplx s = 0.0;
      for (int a = 0; a < N; ++a) {
        cplx prod = 1.0;
        for (int j = 0; j < L; ++j) {
          const int u = ((a - pre[col][j] + pre[row][j]) % N + N) % N;
          const int v = ((a - pre[col][j + 1] + pre[row][j]) % N + N) % N;
          prod *= W[u] * Wb[v];
        }
        s += omega_pow(N, -static_cast<long long>(Q) * a) * prod;
      }
      T(row, col) = s;
    }
  return T;
}

cplx physical_prefactor(const CurvePoint& q, const CurvePoint& p, int N, int L, TransferVariant v) {
  const cplx other = v == TransferVariant::T ? p.y : p.x;
  const cplx den = std::pow(q.x, N) - std::pow(other, N);
  if (std::abs(den) < 1e-14) throw Error(ErrorKind::Singular, "physical_prefactor: coincident points");
  return std::pow(static_cast<double>(N), 0.5 * L) * std::pow((q.x - other) / den, L);
}

cplx contracted_element(const CVector& dual, const CMatrix& M, const CVector& vec) {
  if (dual.size() != M.rows() || vec.size() != M.cols())
    throw Error(ErrorKind::Dimension, "contracted_element: dimension mismatch");
  return (dual.transpose() * (M * vec))(0, 0);
}

CMatrix shift_operator(const SectorBasis& basis, int Q) {
  const int D = basis.size(), L = basis.L;
  CMatrix S = CMatrix::Zero(D, D);
  for (int i = 0; i < D; ++i) {
    EdgeConfig n(L);
    for (int j = 0; j < L; ++j) n[j] = basis.confs[i][(j + 1) % L];
    S(basis.index(n), i) = omega_pow(basis.N, -static_cast<long long>(Q) * basis.confs[i][0]);
  }
  return S;
}

void dump_matrix_csv(const CMatrix& M, const std::string& path, const std::string& header) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Config, "cannot write " + path);
  out << "row,col,re,im\n" << std::setprecision(17);
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) out << i << ',' << j << ',' << M(i, j).real() << ',' << M(i, j).imag() << '\n';
  std::ofstream side(path + ".header");
  if (!side) throw Error(ErrorKind::Config, "cannot write " + path + ".header");
  side << header;
}

}  // namespace scp

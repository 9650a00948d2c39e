#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "tcj/qalgebra.hpp"
#include "tcj/tensor.hpp"

namespace tcj {

template <class R>
std::complex<R> root_power(long r, long double alpha) {
  long double t = 2.0L * 3.141592653589793238462643383279502884L * alpha /
                  static_cast<long double>(r);
  return {static_cast<R>(std::cos(t)), static_cast<R>(std::sin(t))};
}

template <class R>
std::complex<R> braced_t(long r, long m) {
  long double s = 2.0L * std::sin(3.141592653589793238462643383279502884L *
                                  static_cast<long double>(m) / static_cast<long double>(r));
  return {R(0), static_cast<R>(s)};
}

// The U_q(sl2) operator data assigned to critical points for one color
// dimension n at q = exp(2 pi i / r): the crossing tensors R and R^{-1},
// the diagonal mu, and the four cap/cup weights.
//
// Crossing entries are indexed (i, j, k, l) = (NW, NE, SW, SE) with strands
// oriented downward, so the weight of a positive crossing in a state is
// R^{ij}_{kl}. Nonzero entries of R have l = i + m, k = j - m for a single
// m >= 0 (the Kronecker deltas collapse the m-sum to one term), which gives
// the charge rule i + j = k + l.
template <class R>
struct OperatorSet {
  using C = std::complex<R>;
  struct Entry4 {
    int i, j, k, l;
    C v;
  };

  long n = 0;
  long r = 0;
  std::vector<Entry4> rmat, rinv;
  std::vector<C> mu;                          // mu_j = q^{(2j-(n-1))/2}
  std::vector<C> cap_e, cap_emu, cup_n, cup_nmu;  // diagonal weights

  SparseTensor<R> crossing_tensor(bool positive, std::vector<int> axes, int bits) const {
    auto t = SparseTensor<R>::make(std::move(axes),
                                   {int(n), int(n), int(n), int(n)}, bits);
    for (const auto& e : positive ? rmat : rinv) t.add({e.i, e.j, e.k, e.l}, e.v);
    return t;
  }
  SparseTensor<R> diagonal_tensor(const std::vector<C>& w, std::vector<int> axes,
                                  int bits) const {
    auto t = SparseTensor<R>::make(std::move(axes), {int(n), int(n)}, bits);
    for (int i = 0; i < n; ++i) t.add({i, i}, w[i]);
    return t;
  }
};

template <class R>
OperatorSet<R> make_operator_set(long n, const RootOfUnity& q) {
  if (n < 1 || n > q.r) throw std::domain_error("color dimension must satisfy 1 <= n <= r");
  OperatorSet<R> os;
  os.n = n;
  os.r = q.r;

  auto qpow4 = [&](long long alpha4) {  // q^(alpha4/4)
    return root_power<R>(q.r, static_cast<long double>(alpha4) / 4.0L);
  };

  // product {a+1}{a+2}...{a+m}
  auto rising = [&](long a, long m) {
    std::complex<R> acc{R(1), R(0)};
    for (long t = a + 1; t <= a + m; ++t) acc *= braced_t<R>(q.r, t);
    return acc;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long long base4 = static_cast<long long>(2 * i - n + 1) * (2 * j - n + 1);
      for (int m = 0; m <= std::min<long>(n - 1 - i, j); ++m) {
        // R^{ij}_{kl}, l = i+m, k = j-m:
        //   q^alpha {l}!{n-1-k}! / ({i}!{m}!{n-1-j}!),
        //   alpha = (i-(n-1)/2)(j-(n-1)/2) - m(i-j)/2 - m(m+1)/4
        long long a4 = base4 - 2LL * m * (i - j) - static_cast<long long>(m) * (m + 1);
        std::complex<R> num = rising(i, m) * rising(n - 1 - j, m);
        std::complex<R> den = rising(0, m);  // {m}!
        os.rmat.push_back({i, j, j - m, i + m, qpow4(a4) * num / den});
      }
      for (int m = 0; m <= std::min<long>(i, n - 1 - j); ++m) {
        // (R^-1)^{ij}_{kl}, l = i-m, k = j+m:
        //   (-1)^m q^beta {k}!{n-1-l}! / ({j}!{m}!{n-1-i}!),
        //   beta = -(i-(n-1)/2)(j-(n-1)/2) - m(i-j)/2 + m(m+1)/4
        long long b4 = -base4 - 2LL * m * (i - j) + static_cast<long long>(m) * (m + 1);
        std::complex<R> num = rising(j, m) * rising(n - 1 - i, m);
        std::complex<R> den = rising(0, m);
        std::complex<R> v = qpow4(b4) * num / den;
        if (m % 2) v = -v;
        os.rinv.push_back({i, j, j + m, i - m, v});
      }
    }
  }

  os.mu.resize(n);
  os.cap_e.resize(n);
  os.cap_emu.resize(n);
  os.cup_n.resize(n);
  os.cup_nmu.resize(n);
  for (int j = 0; j < n; ++j) {
    os.mu[j] = root_power<R>(q.r, static_cast<long double>(2 * j - n + 1) / 2.0L);
    os.cap_e[j] = {R(1), R(0)};
    os.cap_emu[j] = os.mu[j];
    os.cup_n[j] = {R(1), R(0)};
    os.cup_nmu[j] = root_power<R>(q.r, -static_cast<long double>(2 * j - n + 1) / 2.0L);
  }

  // tr(mu) = [n], forced by the torus-knot value of essential curves
  std::complex<R> tr{};
  for (auto& m : os.mu) tr += m;
  R expect = static_cast<R>(std::sin(RootOfUnity::pi() * double(n) / double(q.r)) /
                            std::sin(RootOfUnity::pi() / double(q.r)));
  if (q.r >= 2 && std::abs(tr - std::complex<R>{expect, R(0)}) > R(1e-9) * (std::abs(expect) + 1))
    throw std::logic_error("operator set: tr(mu) != [n]");
  return os;
}

// Public double-precision views matching the module surface.
SparseTensor<double> r_matrix(long n, const RootOfUnity& q);
SparseTensor<double> r_inverse(long n, const RootOfUnity& q);
std::vector<cplx> mu_diagonal(long n, const RootOfUnity& q);
struct CapCupTensors {
  SparseTensor<double> cap_e, cap_emu, cup_n, cup_nmu;
};
CapCupTensors cap_cup_tensors(long n, const RootOfUnity& q);

// Debug dump of the operator tensors as JSON (index tuple -> re/im pair).
std::string dump_operators_json(long n, const RootOfUnity& q);

}  // namespace tcj

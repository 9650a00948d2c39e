#include <doctest.h>

#include <vector>

#include "tcj/rmatrix.hpp"

using namespace tcj;

namespace {

// dense (n^2 x n^2) matrix of a crossing tensor, rows (i,j), columns (k,l)
std::vector<std::vector<cplx>> dense(const OperatorSet<double>& os, bool positive) {
  long n = os.n;
  std::vector<std::vector<cplx>> m(n * n, std::vector<cplx>(n * n, {0.0, 0.0}));
  for (auto& e : positive ? os.rmat : os.rinv) m[e.i * n + e.j][e.k * n + e.l] += e.v;
  return m;
}

std::vector<std::vector<cplx>> matmul(const std::vector<std::vector<cplx>>& a,
                                      const std::vector<std::vector<cplx>>& b) {
  std::size_t n = a.size();
  std::vector<std::vector<cplx>> c(n, std::vector<cplx>(n, {0.0, 0.0}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

double max_dev_identity(const std::vector<std::vector<cplx>>& m) {
  double dev = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      dev = std::max(dev, std::abs(m[i][j] - (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
  return dev;
}

cplx entry(const OperatorSet<double>& os, bool pos, int i, int j, int k, int l) {
  for (auto& e : pos ? os.rmat : os.rinv)
    if (e.i == i && e.j == j && e.k == k && e.l == l) return e.v;
  return {0.0, 0.0};
}

}  // namespace

TEST_CASE("n=2 entries match the appendix table") {
  for (long r : {5L, 8L, 12L}) {
    RootOfUnity q(r);
    auto os = make_operator_set<double>(2, q);
    auto qp = [&](double a) { return q.power(a); };

    CHECK(std::abs(entry(os, true, 0, 0, 0, 0) - qp(0.25)) < 1e-12);
    CHECK(std::abs(entry(os, true, 1, 1, 1, 1) - qp(0.25)) < 1e-12);
    CHECK(std::abs(entry(os, true, 1, 0, 0, 1) - qp(-0.25)) < 1e-12);
    CHECK(std::abs(entry(os, true, 0, 1, 1, 0) - qp(-0.25)) < 1e-12);
    CHECK(std::abs(entry(os, true, 0, 1, 0, 1) - (qp(0.25) - qp(-0.75))) < 1e-12);
    CHECK(os.rmat.size() == 5);

    CHECK(std::abs(entry(os, false, 0, 0, 0, 0) - qp(-0.25)) < 1e-12);
    CHECK(std::abs(entry(os, false, 1, 1, 1, 1) - qp(-0.25)) < 1e-12);
    CHECK(std::abs(entry(os, false, 1, 0, 0, 1) - qp(0.25)) < 1e-12);
    CHECK(std::abs(entry(os, false, 0, 1, 1, 0) - qp(0.25)) < 1e-12);
    CHECK(std::abs(entry(os, false, 1, 0, 1, 0) - (qp(-0.25) - qp(0.75))) < 1e-12);
    CHECK(os.rinv.size() == 5);

    // mu for n = 2
    CHECK(std::abs(os.mu[0] - qp(-0.5)) < 1e-12);
    CHECK(std::abs(os.mu[1] - qp(0.5)) < 1e-12);
  }
}

TEST_CASE("charge conservation") {
  RootOfUnity q(9);
  for (long n = 1; n <= 6; ++n) {
    auto os = make_operator_set<double>(n, q);
    for (auto& e : os.rmat) CHECK(e.i + e.j == e.k + e.l);
    for (auto& e : os.rinv) CHECK(e.i + e.j == e.k + e.l);
  }
}

TEST_CASE("R and R inverse compose to the identity") {
  for (long r : {7L, 9L}) {
    RootOfUnity q(r);
    for (long n = 1; n <= std::min(r, 8L); ++n) {
      auto os = make_operator_set<double>(n, q);
      CHECK(max_dev_identity(matmul(dense(os, true), dense(os, false))) < 1e-10);
      CHECK(max_dev_identity(matmul(dense(os, false), dense(os, true))) < 1e-10);
    }
  }
}

TEST_CASE("Yang-Baxter") {
  RootOfUnity q(7);
  for (long n = 2; n <= 5; ++n) {
    auto os = make_operator_set<double>(n, q);
    long N = n * n * n;
    // dense R x Id and Id x R on V^3
    auto r = dense(os, true);
    std::vector<std::vector<cplx>> r12(N, std::vector<cplx>(N, {0.0, 0.0}));
    std::vector<std::vector<cplx>> r23(N, std::vector<cplx>(N, {0.0, 0.0}));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k)
          for (long l = 0; l < n; ++l) {
            cplx v = r[i * n + j][k * n + l];
            if (v == cplx{0.0, 0.0}) continue;
            for (long m = 0; m < n; ++m) {
              r12[(i * n + j) * n + m][(k * n + l) * n + m] += v;
              r23[(m * n + i) * n + j][(m * n + k) * n + l] += v;
            }
          }
    auto lhs = matmul(matmul(r12, r23), r12);
    auto rhs = matmul(matmul(r23, r12), r23);
    double dev = 0.0;
    for (long a = 0; a < N; ++a)
      for (long b = 0; b < N; ++b) dev = std::max(dev, std::abs(lhs[a][b] - rhs[a][b]));
    CHECK(dev < 1e-10);
  }
}

TEST_CASE("twist scalar") {
  // sum_t R^{at}_{bt} mu_t = q^{(n^2-1)/4} delta_ab
  for (long r : {7L, 10L}) {
    RootOfUnity q(r);
    for (long n = 1; n <= 6; ++n) {
      auto os = make_operator_set<double>(n, q);
      cplx twist = q.power(double(n * n - 1) / 4.0);
      std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n, {0.0, 0.0}));
      for (auto& e : os.rmat)
        if (e.j == e.l) m[e.i][e.k] += e.v * os.mu[e.j];
      for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
          CHECK(std::abs(m[a][b] - (a == b ? twist : cplx{0.0, 0.0})) < 1e-10);
    }
  }
}

TEST_CASE("trace of mu is the quantum integer") {
  for (long r : {5L, 11L}) {
    RootOfUnity q(r);
    for (long n = 1; n <= r - 1; ++n) {
      auto mu = mu_diagonal(n, q);
      cplx tr{0.0, 0.0};
      for (auto& v : mu) tr += v;
      CHECK(std::abs(tr - quantum_int(n, q)) < 1e-10);
    }
  }
  CHECK(std::abs(mu_diagonal(1, RootOfUnity(6))[0] - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("cap and cup weights") {
  RootOfUnity q(6);
  auto cc = cap_cup_tensors(2, q);
  CHECK(std::abs(cc.cap_emu.entries.at(cc.cap_emu.pack({0, 0})) - q.power(-0.5)) < 1e-12);
  CHECK(std::abs(cc.cap_emu.entries.at(cc.cap_emu.pack({1, 1})) - q.power(0.5)) < 1e-12);
  CHECK(cc.cap_e.entries.size() == 2);
  CHECK(cc.cup_n.entries.size() == 2);
  // zig-zag: cup then cap along one strand composes to the identity
  for (long n : {2L, 3L}) {
    auto os = make_operator_set<double>(n, q);
    for (long i = 0; i < n; ++i) {
      CHECK(std::abs(os.cap_e[i] * os.cup_n[i] - cplx{1.0, 0.0}) < 1e-12);
      CHECK(std::abs(os.cap_emu[i] * os.cup_nmu[i] - cplx{1.0, 0.0}) < 1e-12);
    }
  }
  CHECK_THROWS_AS(make_operator_set<double>(9, RootOfUnity(6)), std::domain_error);
}

TEST_CASE("operator dump is valid json with golden keys") {
  RootOfUnity q(8);
  std::string j = dump_operators_json(2, q);
  CHECK(j.find("\"0,0,0,0\"") != std::string::npos);
  CHECK(j.find("\"R_inv\"") != std::string::npos);
}

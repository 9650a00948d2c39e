// Acceptance suite: every release criterion as one labelled check, run by
// ctest as a single binary. Prints PASS/FAIL per criterion and exits nonzero
// if any hard criterion fails.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tcj/catalog.hpp"
#include "tcj/linwang.hpp"
#include "tcj/qalgebra.hpp"
#include "tcj/report.hpp"
#include "tcj/rmatrix.hpp"
#include "tcj/skein.hpp"
#include "tcj/statesum.hpp"
#include "tcj/weave.hpp"

using namespace tcj;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("criterion %d [%s]: %s%s%s\n", idx, name.c_str(), pass ? "PASS" : "FAIL",
              detail.empty() ? "" : " - ", detail.c_str());
  if (!pass) ++failures;
}

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * (std::abs(b) + 1.0); }

// 1: all ten nonzero n=2 entries of R and R^-1 match the appendix, <= 1e-12,
//    at r in {5, 8, 12}
bool crit1() {
  for (long r : {5L, 8L, 12L}) {
    RootOfUnity q(r);
    auto os = make_operator_set<double>(2, q);
    auto qp = [&](double a) { return q.power(a); };
    struct Want {
      bool pos;
      int i, j, k, l;
      cplx v;
    };
    std::vector<Want> wants = {
        {true, 0, 0, 0, 0, qp(0.25)},
        {true, 1, 1, 1, 1, qp(0.25)},
        {true, 1, 0, 0, 1, qp(-0.25)},
        {true, 0, 1, 1, 0, qp(-0.25)},
        {true, 0, 1, 0, 1, qp(0.25) - qp(-0.75)},
        {false, 0, 0, 0, 0, qp(-0.25)},
        {false, 1, 1, 1, 1, qp(-0.25)},
        {false, 1, 0, 0, 1, qp(0.25)},
        {false, 0, 1, 1, 0, qp(0.25)},
        {false, 1, 0, 1, 0, qp(-0.25) - qp(0.75)},
    };
    if (os.rmat.size() != 5 || os.rinv.size() != 5) return false;
    for (auto& w : wants) {
      bool found = false;
      for (auto& e : w.pos ? os.rmat : os.rinv)
        if (e.i == w.i && e.j == w.j && e.k == w.k && e.l == w.l) {
          if (std::abs(e.v - w.v) > 1e-12) return false;
          found = true;
        }
      if (!found) return false;
    }
  }
  return true;
}

// 2: R R^-1 = I and Yang-Baxter to 1e-10 for n <= 5; twist scalar
//    q^{(n^2-1)/4} for n <= 6
bool crit2() {
  RootOfUnity q(7);
  for (long n = 1; n <= 5; ++n) {
    auto os = make_operator_set<double>(n, q);
    // dense products on V tensor V
    long N = n * n;
    std::vector<cplx> r(N * N, cplx{}), ri(N * N, cplx{});
    for (auto& e : os.rmat) r[(e.i * n + e.j) * N + (e.k * n + e.l)] += e.v;
    for (auto& e : os.rinv) ri[(e.i * n + e.j) * N + (e.k * n + e.l)] += e.v;
    for (long a = 0; a < N; ++a)
      for (long b = 0; b < N; ++b) {
        cplx acc{};
        for (long c = 0; c < N; ++c) acc += r[a * N + c] * ri[c * N + b];
        if (std::abs(acc - (a == b ? cplx{1.0, 0.0} : cplx{})) > 1e-10) return false;
      }
    // Yang-Baxter on V^3
    long M = N * n;
    auto idx3 = [&](long a, long b, long c) { return (a * n + b) * n + c; };
    std::vector<cplx> r12(M * M, cplx{}), r23(M * M, cplx{});
    for (auto& e : os.rmat)
      for (long m = 0; m < n; ++m) {
        r12[idx3(e.i, e.j, m) * M + idx3(e.k, e.l, m)] += e.v;
        r23[idx3(m, e.i, e.j) * M + idx3(m, e.k, e.l)] += e.v;
      }
    auto mul = [&](const std::vector<cplx>& A, const std::vector<cplx>& B) {
      std::vector<cplx> C(M * M, cplx{});
      for (long a = 0; a < M; ++a)
        for (long c = 0; c < M; ++c) {
          if (A[a * M + c] == cplx{}) continue;
          for (long b = 0; b < M; ++b) C[a * M + b] += A[a * M + c] * B[c * M + b];
        }
      return C;
    };
    auto lhs = mul(mul(r12, r23), r12);
    auto rhs = mul(mul(r23, r12), r23);
    for (long a = 0; a < M * M; ++a)
      if (std::abs(lhs[a] - rhs[a]) > 1e-10) return false;
  }
  for (long n = 1; n <= 6; ++n) {
    RootOfUnity q8(8);
    auto os = make_operator_set<double>(n, q8);
    cplx twist = q8.power(double(n * n - 1) / 4.0);
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        cplx acc{};
        for (auto& e : os.rmat)
          if (e.i == a && e.k == b && e.j == e.l) acc += e.v * os.mu[e.j];
        if (std::abs(acc - (a == b ? twist : cplx{})) > 1e-10) return false;
      }
  }
  return true;
}

// 3: essential curves evaluate to n; unknot to [n]; unknot at r = n vanishes
bool crit3(std::string& detail) {
  RootOfUnity q(12);
  for (auto& name : {"loop_1_0", "loop_1_1", "loop_2_1", "curve_0_1_morse",
                     "curve_1_1_twisted"}) {
    const auto& d = catalog_get(name).diagram;
    for (long n = 1; n <= 10; ++n)
      if (!close(jT(d, n, q).value, cplx{double(n), 0.0}, 1e-10)) {
        detail = std::string(name) + " at n=" + std::to_string(n);
        return false;
      }
  }
  const auto& u = catalog_get("unknot").diagram;
  for (long n = 1; n <= 11; ++n)
    if (std::abs(jT(u, n, q).value - quantum_int(n, q)) > 1e-10) {
      detail = "unknot at n=" + std::to_string(n);
      return false;
    }
  for (long n : {2L, 3L, 4L, 6L})
    if (std::abs(jT(u, n, RootOfUnity(n)).value) > 1e-9) {
      detail = "unknot at r=n=" + std::to_string(n);
      return false;
    }
  return true;
}

// 4: cross-oracle equalities on every catalog diagram
bool crit4(std::string& detail) {
  for (long r : {5L, 7L, 12L}) {
    RootOfUnity q(r);
    for (auto& name : catalog_names()) {
      const auto& d = catalog_get(name).diagram;
      cplx a = jT(d, 2, q).value;
      cplx b = jT2_linwang(d, q);
      if (std::abs(a - b) > 1e-10 * (std::abs(a) + 1.0)) {
        detail = "linwang " + name + " r=" + std::to_string(r);
        return false;
      }
    }
  }
  RootOfUnity q7(7);
  for (auto& name : catalog_names()) {
    const auto& d = catalog_get(name).diagram;
    for (long n = 2; n <= 4; ++n)
      if (!close(jT_cabled(d, n, q7).value, jT(d, n, q7).value, 1e-8)) {
        detail = "cabling " + name + " n=" + std::to_string(n);
        return false;
      }
  }
  for (long n = 3; n <= 8; ++n) {
    double direct = weave_direct(n).value;
    double sum = jT(catalog_get("W").diagram, n, RootOfUnity(n)).value.real();
    if (std::abs(direct - sum) > 1e-8 * std::max(std::abs(direct), std::abs(sum))) {
      detail = "weave vs statesum n=" + std::to_string(n);
      return false;
    }
  }
  for (long n = 3; n <= 40; ++n) {
    double a = weave_direct(n).log_value, b = weave_fast(n).log_value;
    if (std::abs(a - b) > 1e-8 * std::max(1.0, std::abs(a))) {
      detail = "weave direct vs fast n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// 5: table rows for B and ell at n = 10, 20 within 1e-3 (green_2_1 is a soft
//    target: reported, never fatal)
bool crit5(std::string& detail) {
  struct Row {
    const char* link;
    long n;
    double want;
  };
  for (Row row : {Row{"B", 10, 7.1834}, Row{"B", 20, 7.3637}, Row{"ell", 10, 9.5569},
                  Row{"ell", 20, 9.9321}}) {
    double got = jT(catalog_get(row.link).diagram, row.n, RootOfUnity(row.n)).normalized_log;
    if (std::abs(got - row.want) > 1e-3) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%s at n=%ld: got %.4f want %.4f", row.link, row.n,
                    got, row.want);
      detail = buf;
      return false;
    }
  }
  double soft = jT(catalog_get("green_2_1").diagram, 10, RootOfUnity(10)).normalized_log;
  char buf[128];
  std::snprintf(buf, sizeof buf, "green_2_1 soft target 5.4685, got %.4f (%s)", soft,
                std::abs(soft - 5.4685) <= 1e-3 ? "hit" : "encoding flagged, not the engine");
  detail = buf;
  return true;
}

// 6: weave trend at n = 50, 100, 200, 400
bool crit6(std::string& detail) {
  double target = 4.0 * volume_constants().v_oct;
  double prev_gap = 1e18;
  for (long n : {50L, 100L, 200L, 400L}) {
    WeaveEval ev = weave_fast(n);
    if (!(ev.normalized_log > 0.0) || ev.normalized_log > gl_upper_bound(4) + 1.0) {
      detail = "window violated at n=" + std::to_string(n);
      return false;
    }
    double gap = std::abs(ev.normalized_log - 14.6555);
    if (gap >= prev_gap) {
      detail = "gap not decreasing at n=" + std::to_string(n);
      return false;
    }
    prev_gap = gap;
    if (lower_bound_term_log(n) > ev.log_value) {
      detail = "lower bound exceeds value at n=" + std::to_string(n);
      return false;
    }
  }
  (void)target;
  return true;
}

// 7: J^T_n(fig8 # meridian) = n J_n(4_1) for n = 2..5 at r = 13
bool crit7(std::string& detail) {
  RootOfUnity q(13);
  const auto& d = catalog_get("fig8_meridian").diagram;
  for (long n = 2; n <= 5; ++n) {
    cplx lhs = jT(d, n, q).value;
    cplx rhs = double(n) * jones_oracle_fig8(n, q);
    if (!close(lhs, rhs, 1e-8)) {
      detail = "n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// 8: invariance suite and exact skein/kink relations
bool crit8(std::string& detail) {
  VerifyOptions opt;
  opt.only = "invariance";
  VerifyReport inv = run_verify(opt);
  opt.only = "skein";
  VerifyReport sk = run_verify(opt);
  for (auto& c : inv.checks)
    if (!c.pass) {
      detail = c.name + ": " + c.detail;
      return false;
    }
  for (auto& c : sk.checks)
    if (!c.pass) {
      detail = c.name + ": " + c.detail;
      return false;
    }
  return true;
}

// 9: cmd_table output is byte-identical across thread counts
bool crit9() {
  TableOptions opt;
  opt.links = {"B", "green_2_1"};
  opt.ns = {4, 6, 8};
  opt.threads = 1;
  std::string a = table_csv(opt);
  opt.threads = 4;
  std::string b = table_csv(opt);
  opt.threads = 2;
  std::string c = table_csv(opt);
  return a == b && b == c && !a.empty();
}

}  // namespace

int main() {
  std::string detail;

  report(1, "R-matrix golden values", crit1());
  report(2, "operator identities", crit2());
  detail.clear();
  report(3, "curve values", crit3(detail), detail);
  detail.clear();
  report(4, "cross-oracle equalities", crit4(detail), detail);
  detail.clear();
  report(5, "table reproduction", crit5(detail), detail);
  detail.clear();
  report(6, "weave volume trend", crit6(detail), detail);
  detail.clear();
  report(7, "meridian relationship", crit7(detail), detail);
  detail.clear();
  report(8, "invariance suite", crit8(detail), detail);
  report(9, "determinism across threads", crit9());

  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

#include "tcj/weave.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tcj/tensor.hpp"

namespace tcj {

namespace {

// prefix logs: lf[k] = ln|{k}!| at r = n
std::vector<double> factorial_logs(long n) {
  std::vector<double> lf(n);
  lf[0] = 0.0;
  double pi = RootOfUnity::pi();
  for (long k = 1; k < n; ++k)
    lf[k] = lf[k - 1] + std::log(2.0 * std::sin(pi * double(k) / double(n)));
  return lf;
}

WeaveEval finish(long n, double log_value, const char* method) {
  WeaveEval ev;
  ev.n = n;
  ev.log_value = log_value;
  ev.value = log_value < 700.0 ? std::exp(log_value)
                               : std::numeric_limits<double>::infinity();
  ev.normalized_log = 2.0 * RootOfUnity::pi() / double(n) * log_value;
  ev.method = method;
  return ev;
}

}  // namespace

WeaveEval weave_direct(long n, long cap) {
  if (n < 2) throw std::domain_error("weave_direct: n >= 2");
  if (n > cap) throw resource_error("weave_direct: n exceeds the O(n^5) cap");
  auto lf = factorial_logs(n);
  std::vector<double> ct(n), st(n);
  for (long j = 0; j < n; ++j) {
    double t = 2.0 * RootOfUnity::pi() * double(j) / double(n);
    ct[j] = std::cos(t);
    st[j] = std::sin(t);
  }

  double re = 0.0, im = 0.0;
  for (long m = 0; m < n; ++m) {
    long L = n - m;
    std::vector<double> F(L);  // F_m(x) = |{x+m}!/{x}!|^2
    for (long x = 0; x < L; ++x) F[x] = std::exp(2.0 * (lf[x + m] - lf[x]));
    double inv = std::exp(-4.0 * lf[m]);
    for (long a = 0; a < L; ++a)
      for (long b = 0; b < L; ++b)
        for (long c = 0; c < L; ++c) {
          double fabc = F[a] * F[b] * F[c] * inv;
          long ac = a - c;
          for (long dd = 0; dd < L; ++dd) {
            long ph = (ac * (dd - b)) % n;
            if (ph < 0) ph += n;
            double t = fabc * F[dd];
            re += ct[ph] * t;
            im += st[ph] * t;
          }
        }
  }
  if (!(re > 0.0) || std::abs(im) > 1e-8 * std::abs(re))
    throw std::logic_error("weave_direct: value failed the reality check");
  return finish(n, std::log(re), "direct_n5");
}

WeaveEval weave_fast(long n) {
  if (n < 2) throw std::domain_error("weave_fast: n >= 2");
  auto lf = factorial_logs(n);
  std::vector<double> ct(n), st(n);
  for (long j = 0; j < n; ++j) {
    double t = 2.0 * RootOfUnity::pi() * double(j) / double(n);
    ct[j] = std::cos(t);
    st[j] = std::sin(t);
  }

  // logsumexp over the per-m contributions, all of which are non-negative
  std::vector<double> logs;
  for (long m = 0; m < n; ++m) {
    long L = n - m;
    std::vector<double> logF(L);
    double mx = -std::numeric_limits<double>::infinity();
    for (long x = 0; x < L; ++x) {
      logF[x] = 2.0 * (lf[x + m] - lf[x]);
      mx = std::max(mx, logF[x]);
    }
    std::vector<double> f(L);
    for (long x = 0; x < L; ++x) f[x] = std::exp(logF[x] - mx);

    // G(t) = sum_a e^{2 pi i a t / n} f(a); |G(-t)| = |G(t)|
    std::vector<double> g2(L);
    for (long t = 0; t < L; ++t) {
      double gr = 0.0, gi = 0.0;
      for (long a = 0; a < L; ++a) {
        long ph = (a * t) % n;
        gr += ct[ph] * f[a];
        gi += st[ph] * f[a];
      }
      g2[t] = gr * gr + gi * gi;
    }
    // C(t) = sum_b f(b) f(b+t)
    double s = 0.0;
    for (long t = 0; t < L; ++t) {
      double corr = 0.0;
      for (long b = 0; b + t < L; ++b) corr += f[b] * f[b + t];
      s += (t == 0 ? 1.0 : 2.0) * corr * g2[t];
    }
    if (s > 0.0) logs.push_back(-4.0 * lf[m] + 4.0 * mx + std::log(s));
  }

  double top = -std::numeric_limits<double>::infinity();
  for (double v : logs) top = std::max(top, v);
  double acc = 0.0;
  for (double v : logs) acc += std::exp(v - top);
  return finish(n, top + std::log(acc), "nu_n3");
}

double gl_upper_bound(long crossings) {
  if (crossings < 0) throw std::domain_error("gl_upper_bound: crossings >= 0");
  return double(crossings) * volume_constants().v_oct;
}

double lower_bound_term_log(long n) {
  if (n < 4) throw std::domain_error("lower_bound_term_log: n >= 4");
  auto lf = factorial_logs(n);
  double base = -4.0 * lf[n / 2];
  double v1 = base + 8.0 * (lf[(3 * n) / 4] - lf[n / 4]);
  double v2 = base + 8.0 * (lf[(3 * n) / 4 - 1] - lf[n / 4]);
  return std::min(v1, v2);
}

}  // namespace tcj

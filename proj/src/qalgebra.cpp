#include "tcj/qalgebra.hpp"

#include <array>
#include <limits>

namespace tcj {

double log_quantum_factorial_mag(long m, long r) {
  if (m < 0 || m > r - 1)
    throw std::domain_error("log_quantum_factorial_mag: need 0 <= m <= r-1");
  double acc = 0.0, c = 0.0;  // Kahan
  double pi = RootOfUnity::pi();
  for (long k = 1; k <= m; ++k) {
    double term = std::log(2.0 * std::sin(pi * static_cast<double>(k) /
                                          static_cast<double>(r)));
    double y = term - c;
    double t = acc + y;
    c = (t - acc) - y;
    acc = t;
  }
  return acc;
}

namespace {

// zeta(2k) for k = 1..ZN, filled on first use
constexpr int ZN = 40;

const std::array<double, ZN + 1>& zeta_even() {
  static const std::array<double, ZN + 1> table = [] {
    std::array<double, ZN + 1> z{};
    double pi = RootOfUnity::pi();
    z[1] = pi * pi / 6.0;
    for (int k = 2; k <= ZN; ++k) {
      // direct sum; integral tail correction keeps the error below 1e-16
      double s = 0.0;
      int M = 4000;
      for (int j = M; j >= 1; --j) s += std::pow(static_cast<double>(j), -2.0 * k);
      s += std::pow(static_cast<double>(M), 1.0 - 2.0 * k) / (2.0 * k - 1.0);
      z[k] = s;
    }
    return z;
  }();
  return table;
}

}  // namespace

// Power-series form of the Fourier sum (1/2) sum_k sin(2kx)/k^2: after
// reduction to |t| <= pi/2,
//   L(t) = t(1 - ln|2t|) + sum_{k>=1} zeta(2k)/(k(2k+1)) * t^(2k+1)/pi^(2k).
// Terms fall as (t/pi)^(2k) <= 4^-k; truncated once below 1e-14 as the raw
// series would be.
double lobachevsky(double x) {
  if (!std::isfinite(x)) throw std::domain_error("lobachevsky: non-finite x");
  double pi = RootOfUnity::pi();
  double t = std::remainder(x, pi);  // odd, pi-periodic reduction
  if (t == 0.0) return 0.0;
  double at = std::abs(t);
  double lead = t * (1.0 - std::log(2.0 * at));
  const auto& z = zeta_even();
  double ratio = (t / pi) * (t / pi);
  double pw = ratio;  // (t/pi)^(2k)
  double acc = 0.0, c = 0.0;
  for (int k = 1; k <= ZN; ++k) {
    double term = z[k] / (static_cast<double>(k) * (2.0 * k + 1.0)) * pw * t;
    double y = term - c;
    double s = acc + y;
    c = (s - acc) - y;
    acc = s;
    if (std::abs(term) < 1e-14 * std::max(1.0, std::abs(lead))) break;
    pw *= ratio;
  }
  return lead + acc;
}

VolumeConstants volume_constants() {
  static const VolumeConstants v = {
      8.0 * lobachevsky(RootOfUnity::pi() / 4.0),
      3.0 * lobachevsky(RootOfUnity::pi() / 3.0),
  };
  return v;
}

}  // namespace tcj

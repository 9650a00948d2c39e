#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace tcj {

using cplx = std::complex<double>;

// q = exp(2*pi*i/r), the root of unity every evaluation is pinned to.
// Powers q^alpha are taken for alpha in (1/4)Z throughout, so alpha is
// carried as a double that is exact for quarter-integers.
struct RootOfUnity {
  long r = 0;

  explicit RootOfUnity(long order) : r(order) {
    if (order < 1) throw std::invalid_argument("root order must be >= 1");
  }

  cplx q() const { return power(1.0); }

  // q^alpha = exp(2*pi*i*alpha/r)
  cplx power(double alpha) const {
    double t = 2.0 * pi() * alpha / static_cast<double>(r);
    return {std::cos(t), std::sin(t)};
  }

  static constexpr double pi() { return 3.14159265358979323846264338327950288; }
};

// {m} = q^{m/2} - q^{-m/2} = 2*i*sin(pi*m/r)
inline cplx quantum_braced(long m, const RootOfUnity& q) {
  return {0.0, 2.0 * std::sin(RootOfUnity::pi() * static_cast<double>(m) /
                              static_cast<double>(q.r))};
}

// [m] = {m}/{1}, real-valued
inline cplx quantum_int(long m, const RootOfUnity& q) {
  if (q.r < 2) throw std::domain_error("[m] undefined at r = 1: {1} = 0");
  double pi = RootOfUnity::pi();
  double num = std::sin(pi * static_cast<double>(m) / static_cast<double>(q.r));
  double den = std::sin(pi / static_cast<double>(q.r));
  return {num / den, 0.0};
}

// {m}! = {m}{m-1}...{1}; empty product for m = 0.
// Requires 0 <= m <= r-1 so every factor has non-negative imaginary part.
inline cplx quantum_factorial(long m, const RootOfUnity& q) {
  if (m < 0 || m > q.r - 1)
    throw std::domain_error("quantum_factorial: need 0 <= m <= r-1");
  cplx acc{1.0, 0.0};
  for (long k = 1; k <= m; ++k) acc *= quantum_braced(k, q);
  return acc;
}

// ln|{m}!| = sum_{k=1..m} ln(2 sin(pi k / r)); used where |{m}!| overflows.
double log_quantum_factorial_mag(long m, long r);

// Lobachevsky function  L(x) = -int_0^x ln|2 sin t| dt,
// odd and pi-periodic, equal to the Fourier sum (1/2) sum sin(2kx)/k^2.
double lobachevsky(double x);

// (v_oct, v_tet) = (8 L(pi/4), 3 L(pi/3))
struct VolumeConstants {
  double v_oct;
  double v_tet;
};
VolumeConstants volume_constants();

// A complex value kept as ln|z| plus a unit phase, for magnitudes far
// outside double range.
struct LogMagnitude {
  double logmag = -std::numeric_limits<double>::infinity();
  cplx phase = {0.0, 0.0};

  static LogMagnitude from_complex(cplx z) {
    LogMagnitude lm;
    double a = std::abs(z);
    if (a == 0.0) return lm;
    lm.logmag = std::log(a);
    lm.phase = z / a;
    return lm;
  }
  static LogMagnitude from_log(double lg, cplx ph) { return {lg, ph}; }

  bool is_zero() const { return !(logmag > -std::numeric_limits<double>::infinity()); }
  cplx value() const { return is_zero() ? cplx{0.0, 0.0} : phase * std::exp(logmag); }

  LogMagnitude operator*(const LogMagnitude& o) const {
    if (is_zero() || o.is_zero()) return {};
    return {logmag + o.logmag, phase * o.phase};
  }
};

}  // namespace tcj

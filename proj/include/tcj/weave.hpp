#pragma once

#include <string>

#include "tcj/qalgebra.hpp"

namespace tcj {

// Closed-form value of J^T_n(W; e^{2 pi i / n}) for the 2-by-2 square weave.
// Values grow like exp(2.33 n), so the log is authoritative; `value` is +inf
// once the magnitude leaves double range.
struct WeaveEval {
  long n = 0;
  double log_value = 0.0;       // ln J^T_n(W)
  double value = 0.0;           // exp(log_value) when representable
  double normalized_log = 0.0;  // (2 pi / n) ln J^T_n(W)
  std::string method;           // "direct_n5" or "nu_n3"
};

// Five-fold sum over (m, a, b, c, d); O(n^5) terms. The imaginary part must
// vanish to 1e-8 relative.
WeaveEval weave_direct(long n, long cap = 60);

// Factorized form: for each m the phase sum over (a, c) collapses to
// |G_m(d-b)|^2 with G_m(t) = sum_a e^{2 pi i a t / n} F_m(a); O(n^3) total,
// evaluated in log space with per-m rescaling.
WeaveEval weave_fast(long n);

// c * v_oct, the asymptotic upper bound for a c-crossing diagram.
double gl_upper_bound(long crossings);

// ln of the dominant-summand lower bound (min of the two floor variants).
double lower_bound_term_log(long n);

}  // namespace tcj

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcj/qalgebra.hpp"

namespace tcj {

// Integer-coefficient Laurent polynomial in A (A^4 = q). Exact arithmetic;
// coefficients are int64 which covers every bracket this artifact computes.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exp, std::int64_t coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(std::int64_t k) {
    if (k == 0) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  cplx eval(cplx a) const;
  std::string str(const std::string& var = "A") const;

  void add_term(int exp, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_[exp] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  std::map<int, std::int64_t> terms_;
};

// Chebyshev S_j: S_0 = 1, S_1 = z, S_{j+1} = z S_j - S_{j-1}.
// Coefficient of z^i sits at index i.
std::vector<std::int64_t> chebyshev_coeffs(int j);

// S_j evaluated at an integer point (exact)
std::int64_t chebyshev_at(int j, std::int64_t z);

}  // namespace tcj

#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcj/diagram.hpp"
#include "tcj/laurent.hpp"
#include "tcj/statesum.hpp"

namespace tcj {

// Multiset of essential loop classes; keys are in normal form (first nonzero
// coordinate positive), values are multiplicities.
using ClassMultiset = std::map<std::pair<int, int>, int>;

std::pair<int, int> normalize_class(int a, int b);

// Element of the torus skein module: finite sum of class multisets with
// exact Laurent coefficients. Contractible loops never appear; they are
// absorbed as factors of (-A^2 - A^-2).
class SkeinElement {
 public:
  void add(const ClassMultiset& classes, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(classes, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  const std::map<ClassMultiset, LaurentPoly>& terms() const { return terms_; }
  bool operator==(const SkeinElement& o) const { return terms_ == o.terms_; }

  SkeinElement& operator+=(const SkeinElement& o) {
    for (auto& [cls, p] : o.terms_) add(cls, p);
    return *this;
  }
  SkeinElement scaled(const LaurentPoly& f) const {
    SkeinElement out;
    for (auto& [cls, p] : terms_) out.add(cls, p * f);
    return out;
  }

 private:
  std::map<ClassMultiset, LaurentPoly> terms_;
};

struct SkeinOptions {
  int max_crossings = 24;
};

// Framed bracket in S(T^2): resolves every crossing, absorbs contractible
// loops into (-A^2 - A^-2) factors and records essential classes.
// Orientations and mu-decorations are ignored.
SkeinElement bracket_T(const TorusDiagram& d, const SkeinOptions& opt = {});

// Two-variable bracket: every essential class maps to z.
struct TauBracket {
  std::map<int, LaurentPoly> by_z_power;
  std::string str() const;
  bool operator==(const TauBracket& o) const { return by_z_power == o.by_z_power; }
};
TauBracket tau_bracket(const TorusDiagram& d, const SkeinOptions& opt = {});

// p2: essential multiset -> 2^(number of essential loops), empty -> 1.
LaurentPoly p2(const SkeinElement& s);

// Kauffman multi-bracket against one Chebyshev polynomial S_{degree_j} per
// component: multilinear expansion over cablings.
SkeinElement multibracket(const TorusDiagram& d, const std::map<int, int>& cheb_degree,
                          const SkeinOptions& opt = {});

// SU(2) toroidal colored Jones polynomial via the skein path:
//   ((-1)^{n-1} A^{n^2-1})^{-w(D)} p2(<S_{n-1},...,S_{n-1}>_D) at A^4 = q,
// evaluated at A = exp(2 pi i / (4r)).
InvariantResult jT_su2(const TorusDiagram& d, long n, const RootOfUnity& q,
                       const SkeinOptions& opt = {});

std::string skein_to_json(const SkeinElement& s);

}  // namespace tcj

#include "tcj/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace tcj {

cplx LaurentPoly::eval(cplx a) const {
  cplx acc{0.0, 0.0};
  for (auto& [e, c] : terms_) {
    acc += static_cast<double>(c) * std::pow(a, e);
  }
  return acc;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t ac = c > 0 ? c : -c;
    if (ac != 1 || e == 0) os << ac;
    if (e != 0) {
      if (ac != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::vector<std::int64_t> chebyshev_coeffs(int j) {
  if (j < 0) throw std::invalid_argument("chebyshev_coeffs: j >= 0");
  std::vector<std::int64_t> prev = {1};      // S_0
  if (j == 0) return prev;
  std::vector<std::int64_t> cur = {0, 1};    // S_1
  for (int k = 1; k < j; ++k) {
    std::vector<std::int64_t> next(k + 2, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::int64_t chebyshev_at(int j, std::int64_t z) {
  std::int64_t prev = 1;
  if (j == 0) return prev;
  std::int64_t cur = z;
  for (int k = 1; k < j; ++k) {
    std::int64_t next = z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace tcj

#pragma once

#include <cstdint>
#include <vector>

#include "tcj/diagram.hpp"
#include "tcj/qalgebra.hpp"

namespace tcj {

// One admissible 0/1 edge labeling together with its crossing weight and the
// summed rotation numbers of the 0- and 1-labeled loops after resolution.
struct AdmissibleState {
  std::vector<int> labels;  // per edge, in diagram edge order
  long rot0 = 0;
  long rot1 = 0;
  cplx weight{1.0, 0.0};  // product of crossing weights
};

std::vector<AdmissibleState> linwang_states(const TorusDiagram& d, const RootOfUnity& q,
                                            std::size_t max_states = std::size_t(1) << 24);

// J^T_2 by admissible-state enumeration:
//   (q^{3/4})^{-w(D)} sum_s q^{(rot1 - rot0)/2} w^c(s)
cplx jT2_linwang(const TorusDiagram& d, const RootOfUnity& q,
                 std::size_t max_states = std::size_t(1) << 24);

}  // namespace tcj

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcj/diagram.hpp"
#include "tcj/qalgebra.hpp"
#include "tcj/rmatrix.hpp"
#include "tcj/tensor.hpp"

namespace tcj {

struct Coloring {
  std::map<int, long> colors;  // component index -> n

  long at(int comp) const {
    auto it = colors.find(comp);
    if (it == colors.end())
      throw validation_error("no color for component " + std::to_string(comp));
    return it->second;
  }
  static Coloring uniform(const TorusDiagram& d, long n) {
    Coloring c;
    for (auto& [key, comp] : d.components) c.colors[comp] = n;
    return c;
  }
};

struct EvalOptions {
  std::size_t max_tensor_entries = std::size_t(1) << 31;
  bool extended = false;  // evaluate in long double
};

enum class Flavor { sl2_framed, sl2_multi, sl2_jones, su2_jones };
const char* flavor_name(Flavor f);

struct InvariantResult {
  cplx value{0.0, 0.0};
  long n = 0;                // uniform color, 0 when genuinely multi-colored
  std::vector<long> colors;  // per component, indexed by component number
  long r = 0;
  Flavor flavor = Flavor::sl2_jones;
  WritheData writhe_data;
  double normalized_log = 0.0;  // (2*pi/r) * ln|value|
};

// Pseudo-operator state sum: sum over basis labelings of the product of
// critical-point weights. Bare loops contribute a factor n per copy.
cplx phi(const TorusDiagram& d, const Coloring& c, const RootOfUnity& q,
         const EvalOptions& opt = {});

// Contraction schedule for the diagram's tensor network at uniform color.
ContractionPlan plan_contraction(const TorusDiagram& d);

// Framed multi-colored invariant: no writhe normalization.
InvariantResult jhat_framed(const TorusDiagram& d, const Coloring& c,
                            const RootOfUnity& q, const EvalOptions& opt = {});

// q^{alpha/4} correction from per-component self-writhes,
// alpha = -sum_j w(C_j)(n_j^2 - 1).
InvariantResult jT_multi(const TorusDiagram& d, const Coloring& c,
                         const RootOfUnity& q, const EvalOptions& opt = {});

// Toroidal colored Jones polynomial: total-writhe normalization of the
// uniform coloring.
InvariantResult jT(const TorusDiagram& d, long n, const RootOfUnity& q,
                   const EvalOptions& opt = {});

// Same value computed through level-two cablings only.
InvariantResult jT_cabled(const TorusDiagram& d, long n, const RootOfUnity& q,
                          const EvalOptions& opt = {});

// Framed invariant of a (possibly mixed) coloring via the cabling expansion;
// every term is a uniform color-2 evaluation.
cplx jhat_by_cabling(const TorusDiagram& d, const Coloring& c, const RootOfUnity& q,
                     const EvalOptions& opt = {});

// Contracts the network with one edge cut open; the result maps the cut
// strand's input to its output (axes: head index, tail index).
SparseTensor<double> contract_open(const TorusDiagram& d, const Coloring& c,
                                   const RootOfUnity& q, const std::string& open_edge,
                                   const EvalOptions& opt = {});

}  // namespace tcj

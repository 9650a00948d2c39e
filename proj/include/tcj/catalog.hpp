#pragma once

#include <string>
#include <vector>

#include "tcj/diagram.hpp"
#include "tcj/statesum.hpp"

namespace tcj {

// Built-in validated diagram encodings. Entries sharing a variant_group
// encode the same link (up to moves the invariant must not see) and are the
// raw material of the invariance suite.
struct CatalogEntry {
  std::string name;
  TorusDiagram diagram;
  std::string provenance;     // "paper_figure" or "derived_encoding"
  std::string variant_group;  // empty when the entry stands alone
  std::string note;
};

const CatalogEntry& catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

// 2k-by-2l square weave: 2l vertical strands woven with 2k diagonal strands,
// one crossing per pair per period, alternating.
TorusDiagram weave_diagram(int k, int l);

// J_n of the figure-eight knot from its (1,1)-tangle in the disk: the open
// network contracts to a scalar multiple of the identity and that scalar is
// the value. Entirely independent of the torus machinery.
cplx jones_oracle_fig8(long n, const RootOfUnity& q, const EvalOptions& opt = {});

}  // namespace tcj

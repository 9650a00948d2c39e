#include "tcj/linwang.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "tcj/tensor.hpp"

namespace tcj {

namespace {

// Appendix values of the n = 2 crossing weights in the preferred basis,
// written out explicitly so this path stays independent of the tensor
// generator. Indices are (NW, NE, SW, SE).
cplx crossing_weight(bool positive, int i, int j, int k, int l, const RootOfUnity& q) {
  if (positive) {
    if (i == 0 && j == 0 && k == 0 && l == 0) return q.power(0.25);
    if (i == 1 && j == 1 && k == 1 && l == 1) return q.power(0.25);
    if (i == 1 && j == 0 && k == 0 && l == 1) return q.power(-0.25);
    if (i == 0 && j == 1 && k == 1 && l == 0) return q.power(-0.25);
    if (i == 0 && j == 1 && k == 0 && l == 1) return q.power(0.25) - q.power(-0.75);
    return {0.0, 0.0};
  }
  if (i == 0 && j == 0 && k == 0 && l == 0) return q.power(-0.25);
  if (i == 1 && j == 1 && k == 1 && l == 1) return q.power(-0.25);
  if (i == 1 && j == 0 && k == 0 && l == 1) return q.power(0.25);
  if (i == 0 && j == 1 && k == 1 && l == 0) return q.power(0.25);
  if (i == 1 && j == 0 && k == 1 && l == 0) return q.power(-0.25) - q.power(0.75);
  return {0.0, 0.0};
}

// rotation contribution of an extremum, in half-units
int rot_half(NodeKind k) {
  switch (k) {
    case NodeKind::cap_emu:
    case NodeKind::cup_n: return 1;
    case NodeKind::cap_e:
    case NodeKind::cup_nmu: return -1;
    default: return 0;
  }
}

}  // namespace

std::vector<AdmissibleState> linwang_states(const TorusDiagram& d, const RootOfUnity& q,
                                            std::size_t max_states) {
  validate_or_throw(d);
  std::map<std::string, int> eidx;
  for (auto& e : d.edges) {
    int k = static_cast<int>(eidx.size());
    eidx[e.id] = k;
  }
  std::size_t ne = d.edges.size();
  if (ne < 64 && (std::size_t(1) << ne) > max_states)
    throw resource_error("linwang: raw state space exceeds the cap");

  // nodes whose last edge is this one, for incremental constraint checks
  std::vector<std::vector<int>> check_at(ne);
  for (std::size_t ni = 0; ni < d.nodes.size(); ++ni) {
    int last = -1;
    for (auto& p : d.nodes[ni].ports) last = std::max(last, eidx.at(p));
    if (last >= 0) check_at[last].push_back(static_cast<int>(ni));
  }

  std::vector<AdmissibleState> out;
  std::vector<int> labels(ne, -1);

  // resolved connectivity + rotation numbers for one admissible labeling
  auto finish = [&]() {
    AdmissibleState st;
    st.labels = labels;
    for (auto& n : d.nodes) {
      if (!is_crossing(n.kind)) continue;
      int i = labels[eidx.at(n.ports[0])], j = labels[eidx.at(n.ports[1])];
      int k = labels[eidx.at(n.ports[2])], l = labels[eidx.at(n.ports[3])];
      st.weight *= crossing_weight(n.kind == NodeKind::cross_pos, i, j, k, l, q);
    }

    // joins between edge ends: 2e = tail, 2e + 1 = head
    std::vector<int> joined(2 * ne, -1);
    std::vector<int> rot_at_join(2 * ne, 0);
    auto end_at = [&](const Node& n, int port) {
      int e = eidx.at(n.ports[port]);
      return port_is_in(n.kind, port) ? 2 * e + 1 : 2 * e;
    };
    auto join = [&](int x, int y, int rh) {
      joined[x] = y;
      joined[y] = x;
      rot_at_join[x] = rot_at_join[y] = rh;
    };
    for (auto& n : d.nodes) {
      if (is_crossing(n.kind)) {
        int i = labels[eidx.at(n.ports[0])], j = labels[eidx.at(n.ports[1])];
        int k = labels[eidx.at(n.ports[2])], l = labels[eidx.at(n.ports[3])];
        bool vertical = (n.kind == NodeKind::cross_pos) ? (i == 0 && j == 1 && k == 0 && l == 1)
                                                        : (i == 1 && j == 0 && k == 1 && l == 0);
        if (vertical) {
          join(end_at(n, 0), end_at(n, 2), 0);
          join(end_at(n, 1), end_at(n, 3), 0);
        } else {
          join(end_at(n, 0), end_at(n, 3), 0);
          join(end_at(n, 1), end_at(n, 2), 0);
        }
      } else {
        join(end_at(n, 0), end_at(n, 1), rot_half(n.kind));
      }
    }

    std::vector<bool> seen(ne, false);
    for (std::size_t e0 = 0; e0 < ne; ++e0) {
      if (seen[e0]) continue;
      long rot2 = 0;
      std::array<long, 2> cls{0, 0};
      int label = labels[e0];
      std::size_t e = e0;
      do {
        seen[e] = true;
        if (labels[e] != label)
          throw std::logic_error("linwang: resolved loop carries mixed labels");
        cls[0] += d.edges[e].wrap[0];
        cls[1] += d.edges[e].wrap[1];
        int partner = joined[2 * e + 1];  // continue out of this edge's head
        rot2 += rot_at_join[2 * e + 1];
        e = static_cast<std::size_t>(partner / 2);
      } while (e != e0);
      if (rot2 % 2 != 0)
        throw validation_error("inconsistent encoding: half-integral rotation number");
      long rot = rot2 / 2;
      // an embedded wrapped loop has rotation number 0, but resolved loops
      // may be immersed (a wrapped strand can keep curls from trace
      // closures), so nonzero values here are legitimate
      (label == 0 ? st.rot0 : st.rot1) += rot;
    }
    // bare loops carry rotation number 0 and a factor q^0 each; nothing to add
    out.push_back(std::move(st));
  };

  // depth-first enumeration with early pruning
  auto admissible_node = [&](int ni) {
    const Node& n = d.nodes[ni];
    if (is_crossing(n.kind)) {
      int i = labels[eidx.at(n.ports[0])], j = labels[eidx.at(n.ports[1])];
      int k = labels[eidx.at(n.ports[2])], l = labels[eidx.at(n.ports[3])];
      return crossing_weight(n.kind == NodeKind::cross_pos, i, j, k, l, q) != cplx{0.0, 0.0};
    }
    return labels[eidx.at(n.ports[0])] == labels[eidx.at(n.ports[1])];
  };

  std::vector<std::size_t> order(ne);
  for (std::size_t e = 0; e < ne; ++e) order[e] = e;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == ne) { finish(); return; }
    std::size_t e = order[depth];
    for (int v : {0, 1}) {
      labels[e] = v;
      bool ok = true;
      for (int ni : check_at[e])
        if (!admissible_node(ni)) { ok = false; break; }
      if (ok) rec(depth + 1);
    }
    labels[e] = -1;
  };
  if (ne > 0) rec(0);
  else finish();
  return out;
}

cplx jT2_linwang(const TorusDiagram& d, const RootOfUnity& q, std::size_t max_states) {
  auto states = linwang_states(d, q, max_states);
  cplx sum{0.0, 0.0};
  for (auto& st : states)
    sum += q.power(0.5 * double(st.rot1 - st.rot0)) * st.weight;
  // each bare essential copy admits both constant labelings, rotation 0:
  // a factor 2 per copy (a (0,0) bare loop would contribute [2], but the
  // catalog has none and validate() allows them only as explicit circles)
  for (auto& b : d.bare_loops) {
    for (int m = 0; m < b.mult; ++m) {
      if (b.cls[0] == 0 && b.cls[1] == 0)
        sum *= q.power(0.5) + q.power(-0.5);
      else
        sum *= 2.0;
    }
  }
  long w = writhe(d).total;
  return q.power(-0.75 * double(w)) * sum;
}

}  // namespace tcj

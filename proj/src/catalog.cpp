#include "tcj/catalog.hpp"

#include <map>
#include <stdexcept>

namespace tcj {

namespace {

using NK = NodeKind;

Node node(std::string id, NK kind, std::vector<std::string> ports) {
  return {std::move(id), kind, std::move(ports)};
}

// counterclockwise contractible circle: value [n]
TorusDiagram make_unknot() {
  TorusDiagram d;
  d.nodes = {node("cap", NK::cap_emu, {"w", "e"}), node("cup", NK::cup_n, {"w", "e"})};
  d.edges = {{"w", {0, 0}}, {"e", {0, 0}}};
  d.components = {{"w", 0}, {"e", 0}};
  return d;
}

// clockwise circle
TorusDiagram make_unknot_cw() {
  TorusDiagram d;
  d.nodes = {node("cap", NK::cap_e, {"w", "e"}), node("cup", NK::cup_nmu, {"w", "e"})};
  d.edges = {{"w", {0, 0}}, {"e", {0, 0}}};
  d.components = {{"w", 0}, {"e", 0}};
  return d;
}

// circle with one curl; the curl pass through the crossing runs NE->SW
TorusDiagram make_unknot_kink(bool positive) {
  TorusDiagram d;
  d.nodes = {
      node("x", positive ? NK::cross_pos : NK::cross_neg, {"m1", "k3", "m2", "k1"}),
      node("kcup", NK::cup_n, {"k1", "k2"}),
      node("kcap", NK::cap_emu, {"k3", "k2"}),
      node("ccup", NK::cup_n, {"m2", "m3"}),
      node("ccap", NK::cap_emu, {"m1", "m3"}),
  };
  d.edges = {{"m1", {0, 0}}, {"m2", {0, 0}}, {"m3", {0, 0}},
             {"k1", {0, 0}}, {"k2", {0, 0}}, {"k3", {0, 0}}};
  for (auto& e : d.edges) d.components[e.id] = 0;
  return d;
}

TorusDiagram make_bare_loop(int a, int b) {
  TorusDiagram d;
  d.bare_loops = {{{a, b}, 1}};
  d.components = {{"bare_loops/0", 0}};
  return d;
}

// essential curve in Morse position, one min-max pair; the ascending return
// carries the extra x-wrap for the (1,-1) variant
TorusDiagram make_morse_curve(int wrap_x) {
  TorusDiagram d;
  d.nodes = {node("mx", NK::cap_e, {"up", "dn"}), node("mn", NK::cup_n, {"dn", "up"})};
  d.edges = {{"dn", {0, -1}}, {"up", {wrap_x, 0}}};
  d.components = {{"dn", 0}, {"up", 0}};
  return d;
}

// 2-by-2 square weave, wired to match the four-factor contraction
//   (R^-1)^{fa}_{gb} R^{be}_{cf} R^{dg}_{ah} (R^-1)^{hc}_{ed}
// with two vertical strands (0,-1) and two diagonal strands (1,-1).
TorusDiagram make_W() {
  TorusDiagram d;
  d.nodes = {
      node("p1", NK::cross_neg, {"d12", "v12", "v11", "d11"}),
      node("p2", NK::cross_pos, {"d22", "v11", "v12", "d21"}),
      node("p3", NK::cross_pos, {"d11", "v21", "v22", "d12"}),
      node("p4", NK::cross_neg, {"d21", "v22", "v21", "d22"}),
  };
  d.edges = {
      {"v11", {0, 0}}, {"v12", {0, -1}}, {"v21", {0, 0}}, {"v22", {0, -1}},
      {"d11", {0, 0}}, {"d12", {1, -1}}, {"d21", {0, -1}}, {"d22", {1, 0}},
  };
  d.components = {{"v11", 0}, {"v12", 0}, {"v21", 1}, {"v22", 1},
                  {"d11", 2}, {"d12", 2}, {"d21", 3}, {"d22", 3}};
  return d;
}

// minimal quotient of the infinite square weave: strands (0,-1) and (2,-1)
// crossing twice, alternating
TorusDiagram make_B() {
  TorusDiagram d;
  d.nodes = {
      node("c1", NK::cross_pos, {"s2b", "s1b", "s1a", "s2a"}),
      node("c2", NK::cross_neg, {"s2a", "s1a", "s1b", "s2b"}),
  };
  d.edges = {{"s1a", {0, 0}}, {"s1b", {0, -1}}, {"s2a", {1, 0}}, {"s2b", {1, -1}}};
  d.components = {{"s1a", 0}, {"s1b", 0}, {"s2a", 1}, {"s2b", 1}};
  return d;
}

// B with the vertical component reversed: the reversed strand now ascends,
// so it meets each branch of the other strand on a shallow descending dip
// between a max and a min. Crossing kinds flip relative to make_B.
TorusDiagram make_B_rev1() {
  TorusDiagram d;
  d.nodes = {
      node("c1", NK::cross_neg, {"sA", "tB", "tA", "sB"}),
      node("c2", NK::cross_pos, {"sD", "tA", "tB", "sE"}),
      node("max1", NK::cap_e, {"sF", "sA"}),
      node("min1", NK::cup_n, {"sB", "sC"}),
      node("max2", NK::cap_e, {"sC", "sD"}),
      node("min2", NK::cup_n, {"sE", "sF"}),
  };
  d.edges = {{"sA", {0, 0}}, {"sB", {0, 0}}, {"sC", {0, 1}},
             {"sD", {0, 0}}, {"sE", {0, 0}}, {"sF", {0, 0}},
             {"tA", {1, 0}}, {"tB", {1, -1}}};
  d.components = {{"sA", 0}, {"sB", 0}, {"sC", 0}, {"sD", 0},
                  {"sE", 0}, {"sF", 0}, {"tA", 1}, {"tB", 1}};
  return d;
}

// triaxial weave: strands (0,-1), (1,-1), (1,-2), three alternating
// crossings, each strand over one neighbor and under the other
TorusDiagram make_ell() {
  TorusDiagram d;
  d.nodes = {
      node("c1", NK::cross_pos, {"d1b", "v1", "v2", "d1a"}),
      node("c2", NK::cross_neg, {"d1a", "d2b", "d2a", "d1b"}),
      node("c3", NK::cross_neg, {"d2a", "v2", "v1", "d2b"}),
  };
  d.edges = {{"v1", {0, 0}},   {"v2", {0, -1}},  {"d1a", {0, -1}},
             {"d1b", {1, 0}},  {"d2a", {1, -1}}, {"d2b", {0, -1}}};
  d.components = {{"v1", 0}, {"v2", 0}, {"d1a", 1}, {"d1b", 1}, {"d2a", 2}, {"d2b", 2}};
  return d;
}

// Green's 2.1 (virtual trefoil) as a torus knot diagram: the 2-braid with
// two positive crossings, closed around the torus with a horizontal shift
TorusDiagram make_green21() {
  TorusDiagram d;
  d.nodes = {
      node("x1", NK::cross_pos, {"a2", "a1", "b1", "b2"}),
      node("x2", NK::cross_pos, {"b1", "b2", "a1", "a2"}),
  };
  d.edges = {{"b1", {0, 0}}, {"b2", {0, 0}}, {"a1", {0, -1}}, {"a2", {1, -1}}};
  d.components = {{"b1", 0}, {"b2", 0}, {"a1", 0}, {"a2", 0}};
  return d;
}

// figure-eight knot as the braid (s1 s2^-1)^2 on three strands; strands 2
// and 3 traced off with cup/cap returns. With close_all false the first
// strand runs around the torus as a meridian; with true it is traced off
// too, giving the nullhomotopic embedding.
TorusDiagram make_fig8(bool close_all) {
  TorusDiagram d;
  d.nodes = {
      node("cap2", NK::cap_emu, {"e1", "e10"}),
      node("cap3", NK::cap_emu, {"e2", "e11"}),
      node("x1", NK::cross_pos, {"em", "e1", "e3", "e4"}),
      node("x2", NK::cross_neg, {"e4", "e2", "e5", "e6"}),
      node("x3", NK::cross_pos, {"e3", "e5", "em2", "e7"}),
      node("x4", NK::cross_neg, {"e7", "e6", "e8", "e9"}),
      node("cup2", NK::cup_n, {"e8", "e10"}),
      node("cup3", NK::cup_n, {"e9", "e11"}),
  };
  d.edges = {{"e1", {0, 0}}, {"e2", {0, 0}},  {"e3", {0, 0}},  {"e4", {0, 0}},
             {"e5", {0, 0}}, {"e6", {0, 0}},  {"e7", {0, 0}},  {"e8", {0, 0}},
             {"e9", {0, 0}}, {"e10", {0, 0}}, {"e11", {0, 0}}};
  for (auto& e : d.edges) d.components[e.id] = 0;
  if (close_all) {
    d.nodes.push_back(node("cup1", NK::cup_n, {"em2", "f2"}));
    d.nodes.push_back(node("cap1", NK::cap_emu, {"em", "f2"}));
    d.edges.push_back({"em2", {0, 0}});
    d.edges.push_back({"f2", {0, 0}});
    d.edges.push_back({"em", {0, 0}});
  } else {
    // one edge from the braid bottom back to its top around the torus
    for (auto& n : d.nodes)
      for (auto& p : n.ports)
        if (p == "em2") p = "em";
    d.edges.push_back({"em", {0, -1}});
  }
  for (auto& e : d.edges) d.components[e.id] = 0;
  return d;
}

std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> cat;
  auto put = [&cat](std::string name, TorusDiagram dia, std::string prov,
                    std::string group, std::string note) {
    validate_or_throw(dia);
    cat[name] = CatalogEntry{name, std::move(dia), std::move(prov), std::move(group),
                             std::move(note)};
  };

  put("empty", TorusDiagram{}, "paper_figure", "", "empty diagram, value 1");
  put("unknot", make_unknot(), "paper_figure", "unknot", "contractible circle, value [n]");
  put("unknot_cw", make_unknot_cw(), "paper_figure", "unknot", "reversed traversal");
  put("unknot_zigzag", insert_zigzag(make_unknot(), "w"), "derived_encoding", "unknot",
      "cancelling min-max pair inserted");
  put("unknot_kink_pos", make_unknot_kink(true), "paper_figure", "",
      "one positive curl, writhe +1");
  put("unknot_kink_neg", make_unknot_kink(false), "paper_figure", "",
      "one negative curl, writhe -1");
  put("loop_1_0", make_bare_loop(1, 0), "paper_figure", "essential", "value n");
  put("loop_1_1", make_bare_loop(1, 1), "paper_figure", "essential", "value n");
  put("loop_2_1", make_bare_loop(2, 1), "paper_figure", "essential", "value n");
  put("curve_0_1_morse", make_morse_curve(0), "derived_encoding", "essential",
      "vertical strand with a min-max wiggle");
  put("curve_1_1_twisted", make_morse_curve(1), "derived_encoding", "essential",
      "Dehn-twisted vertical, class (1,-1)");
  put("W", make_W(), "paper_figure", "W",
      "2-by-2 square weave; 4 crossings, writhe 0; volume 4*v_oct");
  put("W_zigzag", insert_zigzag(make_W(), "v11"), "derived_encoding", "W",
      "W with a cancelling min-max pair");
  put("B", make_B(), "paper_figure", "B",
      "virtual 2-braid; 2 crossings, writhe 0; volume 2*v_oct; table row "
      "7.1834 / 7.3637 at n = 10 / 20");
  put("B_flip", flip(make_B()), "derived_encoding", "B", "all components reversed");
  put("B_rev1", make_B_rev1(), "derived_encoding", "B",
      "vertical component reversed, crossings renormalized downward");
  put("ell", make_ell(), "paper_figure", "",
      "triaxial weave; 3 crossings; volume 10*v_tet; table row 9.5569 / "
      "9.9321 at n = 10 / 20");
  put("green_2_1", make_green21(), "derived_encoding", "",
      "Green's 2.1, virtual trefoil; table row 5.4685 at n = 10 is a soft target");
  put("fig8_meridian", make_fig8(false), "paper_figure", "",
      "figure-eight knot composed with a meridian; value n*J_n(4_1)");
  put("fig8_null", make_fig8(true), "paper_figure", "",
      "nullhomotopic figure-eight; value [n]*J_n(4_1), vanishing at r = n");
  put("split_kink_loop", disjoint_union(make_unknot_kink(true), make_bare_loop(1, 0)),
      "derived_encoding", "split", "kinked unknot next to an essential loop");
  put("split_loop_kink", disjoint_union(make_bare_loop(1, 0), make_unknot_kink(true)),
      "derived_encoding", "split", "same union, opposite order");
  put("split_kink_rev", disjoint_union(flip(make_unknot_kink(true)), make_bare_loop(1, 0)),
      "derived_encoding", "split", "kinked component reversed");
  put("weave_1_1", weave_diagram(1, 1), "derived_encoding", "W",
      "generator output for k = l = 1");
  return cat;
}

const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> cat = build_catalog();
  return cat;
}

}  // namespace

const CatalogEntry& catalog_get(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw std::invalid_argument("unknown catalog entry: " + name);
  return it->second;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (auto& [k, v] : catalog()) names.push_back(k);
  return names;
}

TorusDiagram weave_diagram(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("weave_diagram: k, l >= 1");
  TorusDiagram d;
  int rows = 2 * k, cols = 2 * l;
  long M = 4L * k * l;
  auto xid = [&](int i, int j) { return "x" + std::to_string(i) + "_" + std::to_string(j); };
  auto vedge = [&](int i, int j) { return "v" + std::to_string(i) + "_" + std::to_string(j); };
  auto dedge = [&](int i, int j) { return "d" + std::to_string(i) + "_" + std::to_string(j); };

  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      // vertical strand j continues downward to the next diagonal below
      d.edges.push_back({vedge(i, j), {0, i == 0 ? -1 : 0}});
      d.components[vedge(i, j)] = j;
      // diagonal strand i continues rightward-down to the next vertical
      long ynum = ((2L * i + 1) * l - (2L * j + 1) * k) % M;
      if (ynum < 0) ynum += M;
      d.edges.push_back({dedge(i, j), {j == cols - 1 ? 1 : 0, ynum < 2 * k ? -1 : 0}});
      d.components[dedge(i, j)] = cols + i;
    }
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      // diagonal enters NW and leaves SE; vertical enters NE and leaves SW
      Node n;
      n.id = xid(i, j);
      n.kind = (i + j) % 2 == 0 ? NK::cross_neg : NK::cross_pos;
      n.ports = {
          dedge(i, (j + cols - 1) % cols),  // NW
          vedge((i + 1) % rows, j),         // NE
          vedge(i, j),                      // SW
          dedge(i, j),                      // SE
      };
      d.nodes.push_back(std::move(n));
    }
  }
  return d;
}

cplx jones_oracle_fig8(long n, const RootOfUnity& q, const EvalOptions& opt) {
  if (n >= q.r)
    throw std::domain_error("jones_oracle_fig8: needs n < r (degenerate at n = r)");
  const TorusDiagram& d = catalog_get("fig8_meridian").diagram;
  auto t = contract_open(d, Coloring::uniform(d, n), q, "em", opt);
  if (t.arity() != 2) throw std::logic_error("fig8 tangle did not reduce to a matrix");

  // scalar multiple of the identity by irreducibility
  cplx s{0.0, 0.0};
  for (long a = 0; a < n; ++a) {
    auto it = t.entries.find(t.pack({int(a), int(a)}));
    cplx diag = it == t.entries.end() ? cplx{0.0, 0.0} : it->second;
    if (a == 0) s = diag;
    if (std::abs(diag - s) > 1e-8 * (std::abs(s) + 1))
      throw std::logic_error("fig8 tangle operator is not scalar");
  }
  for (auto& [key, v] : t.entries) {
    auto idx = t.unpack(key);
    if (idx[0] != idx[1] && std::abs(v) > 1e-8 * (std::abs(s) + 1))
      throw std::logic_error("fig8 tangle operator has off-diagonal entries");
  }
  return s;
}

}  // namespace tcj

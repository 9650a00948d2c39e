#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tcj/catalog.hpp"
#include "tcj/skein.hpp"

using namespace tcj;

namespace {

LaurentPoly delta() {
  LaurentPoly d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

SkeinElement single(const ClassMultiset& cls, const LaurentPoly& p) {
  SkeinElement s;
  s.add(cls, p);
  return s;
}

// brute-force bracket oracle: enumerate all 2^c smoothings, classify loops by
// walking an explicit port-pairing table per state
SkeinElement bracket_bruteforce(const TorusDiagram& d) {
  std::map<std::string, int> eidx;
  for (auto& e : d.edges) {
    int k = int(eidx.size());
    eidx[e.id] = k;
  }
  std::vector<const Node*> crossings;
  for (auto& n : d.nodes)
    if (is_crossing(n.kind)) crossings.push_back(&n);

  SkeinElement out;
  for (unsigned long state = 0; state < (1ul << crossings.size()); ++state) {
    // pairing of edge ends: end = 2e (tail) or 2e+1 (head)
    std::map<int, int> mate;
    auto end_at = [&](const Node& n, int port) {
      int e = eidx.at(n.ports[port]);
      return port_is_in(n.kind, port) ? 2 * e + 1 : 2 * e;
    };
    auto pair_up = [&](int x, int y) {
      mate[x] = y;
      mate[y] = x;
    };
    int apow = 0;
    for (std::size_t k = 0; k < crossings.size(); ++k) {
      const Node& n = *crossings[k];
      bool a_sm = (state >> k & 1) == 0;
      apow += a_sm ? 1 : -1;
      bool vertical = (n.kind == NodeKind::cross_pos) == a_sm;
      if (vertical) {
        pair_up(end_at(n, 0), end_at(n, 2));
        pair_up(end_at(n, 1), end_at(n, 3));
      } else {
        pair_up(end_at(n, 0), end_at(n, 1));
        pair_up(end_at(n, 2), end_at(n, 3));
      }
    }
    for (auto& n : d.nodes)
      if (!is_crossing(n.kind)) pair_up(end_at(n, 0), end_at(n, 1));

    // walk loops: inside an edge move tail<->head, at nodes follow mate
    std::set<int> seen;
    int contractible = 0;
    ClassMultiset classes;
    for (auto& e : d.edges) {
      int start = 2 * eidx[e.id];
      if (seen.count(start)) continue;
      int cur = start;
      int wx = 0, wy = 0;
      do {
        seen.insert(cur);
        seen.insert(cur ^ 1);
        const Edge& ed = d.edges[cur / 2];
        // traverse the edge from this end to the other
        bool forward = cur % 2 == 0;
        wx += forward ? ed.wrap[0] : -ed.wrap[0];
        wy += forward ? ed.wrap[1] : -ed.wrap[1];
        cur = mate.at(cur ^ 1);
      } while (cur != start);
      auto [a, b] = normalize_class(wx, wy);
      if (a == 0 && b == 0) ++contractible;
      else ++classes[{a, b}];
    }
    for (auto& bl : d.bare_loops) {
      auto [a, b] = normalize_class(bl.cls[0], bl.cls[1]);
      if (a == 0 && b == 0) contractible += bl.mult;
      else classes[{a, b}] += bl.mult;
    }
    LaurentPoly coeff = LaurentPoly::monomial(apow, 1);
    for (int i = 0; i < contractible; ++i) coeff *= delta();
    out.add(classes, coeff);
  }
  return out;
}

}  // namespace

TEST_CASE("bracket of basic diagrams") {
  CHECK(bracket_T(catalog_get("unknot").diagram) == single({}, delta()));
  CHECK(bracket_T(catalog_get("loop_1_0").diagram) ==
        single({{{1, 0}, 1}}, LaurentPoly::one()));
  // a (1,-1)-class Morse curve normalizes to class (1,-1)
  CHECK(bracket_T(catalog_get("curve_1_1_twisted").diagram) ==
        single({{{1, -1}, 1}}, LaurentPoly::one()));

  // kinked unknot: -A^3 times the unknot's bracket
  LaurentPoly expect = LaurentPoly::monomial(3, -1) * delta();
  CHECK(bracket_T(catalog_get("unknot_kink_pos").diagram) == single({}, expect));
  LaurentPoly expect_neg = LaurentPoly::monomial(-3, -1) * delta();
  CHECK(bracket_T(catalog_get("unknot_kink_neg").diagram) == single({}, expect_neg));
}

TEST_CASE("bracket matches the brute-force oracle") {
  for (auto& name : {"unknot", "unknot_kink_pos", "W", "B", "B_rev1", "ell",
                     "green_2_1", "fig8_meridian", "fig8_null", "split_kink_loop"}) {
    INFO(name);
    CHECK(bracket_T(catalog_get(name).diagram) ==
          bracket_bruteforce(catalog_get(name).diagram));
  }
}

TEST_CASE("bracket ignores node order") {
  TorusDiagram d = catalog_get("W").diagram;
  SkeinElement ref = bracket_T(d);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(d.nodes.begin(), d.nodes.end(), rng);
    CHECK(bracket_T(d) == ref);
  }
}

TEST_CASE("skein relation on the curl, exact") {
  const auto& kinked = catalog_get("unknot_kink_pos").diagram;
  const auto& unknot = catalog_get("unknot").diagram;
  SkeinElement lhs = bracket_T(kinked);
  SkeinElement rhs = bracket_T(disjoint_union(unknot, unknot))
                         .scaled(LaurentPoly::monomial(1, 1));
  rhs += bracket_T(insert_zigzag(unknot, "w")).scaled(LaurentPoly::monomial(-1, 1));
  CHECK(lhs == rhs);
}

TEST_CASE("kink relation across the catalog, exact") {
  for (auto& name : {"unknot", "loop_1_0", "W", "B", "ell", "green_2_1"}) {
    const auto& d = catalog_get(name).diagram;
    std::string edge;
    for (auto& e : d.edges) {
      try {
        TorusDiagram k = insert_kink(d, e.id, true);
        CHECK(bracket_T(k) == bracket_T(d).scaled(LaurentPoly::monomial(3, -1)));
        TorusDiagram kn = insert_kink(d, e.id, false);
        CHECK(bracket_T(kn) == bracket_T(d).scaled(LaurentPoly::monomial(-3, -1)));
        edge = e.id;
        break;
      } catch (const std::invalid_argument&) {
        continue;  // ascending edge; try the next one
      }
    }
    if (d.edges.empty()) continue;
    INFO(name);
    CHECK(!edge.empty());
  }
}

TEST_CASE("tau bracket") {
  CHECK(tau_bracket(catalog_get("loop_1_0").diagram).by_z_power ==
        std::map<int, LaurentPoly>{{1, LaurentPoly::one()}});
  CHECK(tau_bracket(catalog_get("unknot").diagram).by_z_power ==
        std::map<int, LaurentPoly>{{0, delta()}});

  TorusDiagram two;
  two.bare_loops = {{{1, 1}, 2}};
  two.components = {{"bare_loops/0", 0}};
  CHECK(tau_bracket(two).by_z_power == std::map<int, LaurentPoly>{{2, LaurentPoly::one()}});

  CHECK(tau_bracket(catalog_get("W").diagram).str().find("z") != std::string::npos);
}

TEST_CASE("p2") {
  CHECK(p2(single({{{1, 0}, 1}}, LaurentPoly::one())) == LaurentPoly::monomial(0, 2));
  CHECK(p2(single({}, delta())) == delta());
  CHECK(p2(single({{{1, 0}, 3}}, LaurentPoly::one())) == LaurentPoly::monomial(0, 8));

  // tau at z = 2 equals p2 numerically on catalog diagrams
  cplx a0 = std::polar(1.0, 2.0 * RootOfUnity::pi() / 20.0);
  for (auto& name : {"W", "B", "ell", "green_2_1"}) {
    const auto& d = catalog_get(name).diagram;
    auto tb = tau_bracket(d);
    cplx tv{0.0, 0.0};
    for (auto& [zp, poly] : tb.by_z_power) tv += poly.eval(a0) * std::pow(2.0, zp);
    cplx pv = p2(bracket_T(d)).eval(a0);
    CHECK(std::abs(tv - pv) < 1e-10 * (std::abs(pv) + 1.0));
  }
}

TEST_CASE("multibracket") {
  const auto& loop = catalog_get("loop_1_0").diagram;
  // S_2 = z^2 - 1 on a bare loop
  SkeinElement s = multibracket(loop, {{0, 2}});
  SkeinElement expect;
  expect.add({{{1, 0}, 2}}, LaurentPoly::one());
  expect.add({}, LaurentPoly::monomial(0, -1));
  CHECK(s == expect);

  // S_0 on every component empties the diagram
  const auto& W = catalog_get("W").diagram;
  SkeinElement s0 = multibracket(W, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(s0 == single({}, LaurentPoly::one()));

  // S_1 on the unknot
  CHECK(multibracket(catalog_get("unknot").diagram, {{0, 1}}) == single({}, delta()));
}

TEST_CASE("su2 flavor") {
  RootOfUnity q(9);
  for (long n = 1; n <= 6; ++n) {
    CHECK(std::abs(jT_su2(catalog_get("loop_1_0").diagram, n, q).value -
                   cplx{double(n), 0.0}) < 1e-10);
    // nullhomotopic circle: (-1)^{n-1}[n]
    cplx expect = quantum_int(n, q) * ((n - 1) % 2 ? -1.0 : 1.0);
    CHECK(std::abs(jT_su2(catalog_get("unknot").diagram, n, q).value - expect) < 1e-10);
  }
  CHECK(jT_su2(catalog_get("unknot").diagram, 2, q).flavor == Flavor::su2_jones);
}

TEST_CASE("bracket resource cap") {
  SkeinOptions opt;
  opt.max_crossings = 3;
  CHECK_THROWS_AS(bracket_T(catalog_get("W").diagram, opt), resource_error);
}

TEST_CASE("skein json") {
  std::string j = skein_to_json(bracket_T(catalog_get("loop_1_0").diagram));
  CHECK(j.find("\"classes\"") != std::string::npos);
  CHECK(j.find("[1,0,1]") != std::string::npos);
}

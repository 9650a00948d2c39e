#include "tcj/skein.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tcj {

std::pair<int, int> normalize_class(int a, int b) {
  if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
  return {a, b};
}

namespace {

// Arc-endpoint bookkeeping for crossing resolution. Endpoints are edge ends
// (2*edge + 0 for the tail, +1 for the head). For a live arc endpoint x,
// far[x] = its opposite endpoint and wrap[x] = the wrap vector accumulated
// from x to that endpoint.
struct ArcState {
  std::vector<int> far;
  std::vector<std::array<int, 2>> wrap;

  // joins endpoints x and y; returns the loop class if this closes a loop
  std::optional<std::array<int, 2>> join(int x, int y) {
    int fx = far[x], fy = far[y];
    std::array<int, 2> wx = wrap[x], wy = wrap[y];
    if (fx == y) return std::array<int, 2>{wx[0], wx[1]};
    far[fx] = fy;
    far[fy] = fx;
    wrap[fx] = {wy[0] - wx[0], wy[1] - wx[1]};
    wrap[fy] = {wx[0] - wy[0], wx[1] - wy[1]};
    return std::nullopt;
  }
};

LaurentPoly delta_poly() {
  LaurentPoly d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

struct CrossingPorts {
  int ends[4];  // endpoint at NW, NE, SW, SE
  bool positive;
};

}  // namespace

SkeinElement bracket_T(const TorusDiagram& d, const SkeinOptions& opt) {
  validate_or_throw(d);

  std::map<std::string, int> eidx;
  for (auto& e : d.edges) {
    int k = static_cast<int>(eidx.size());
    eidx[e.id] = k;
  }

  ArcState init;
  init.far.resize(2 * d.edges.size());
  init.wrap.resize(2 * d.edges.size());
  for (auto& e : d.edges) {
    int t = 2 * eidx[e.id], h = t + 1;
    init.far[t] = h;
    init.wrap[t] = e.wrap;
    init.far[h] = t;
    init.wrap[h] = {-e.wrap[0], -e.wrap[1]};
  }

  // the end of an edge sitting at a given node port
  auto end_at = [&](const Node& n, int port) {
    int e = eidx.at(n.ports[port]);
    return port_is_in(n.kind, port) ? 2 * e + 1 : 2 * e;
  };

  ClassMultiset base_classes;
  int base_contractible = 0;
  std::vector<CrossingPorts> crossings;

  for (auto& n : d.nodes) {
    if (is_crossing(n.kind)) {
      if (static_cast<int>(crossings.size()) >= opt.max_crossings)
        throw resource_error("bracket_T: crossing count exceeds the resolution cap");
      CrossingPorts cp;
      for (int p = 0; p < 4; ++p) cp.ends[p] = end_at(n, p);
      cp.positive = n.kind == NodeKind::cross_pos;
      crossings.push_back(cp);
    } else {
      // caps and cups just connect their two ends (framed bracket)
      auto cls = init.join(end_at(n, 0), end_at(n, 1));
      if (cls) {
        auto [a, b] = normalize_class((*cls)[0], (*cls)[1]);
        if (a == 0 && b == 0) ++base_contractible;
        else ++base_classes[{a, b}];
      }
    }
  }
  for (std::size_t k = 0; k < d.bare_loops.size(); ++k) {
    auto [a, b] = normalize_class(d.bare_loops[k].cls[0], d.bare_loops[k].cls[1]);
    if (a == 0 && b == 0) base_contractible += d.bare_loops[k].mult;
    else base_classes[{a, b}] += d.bare_loops[k].mult;
  }

  const LaurentPoly delta = delta_poly();
  // powers of delta, filled on demand
  std::vector<LaurentPoly> delta_pow = {LaurentPoly::one()};
  auto delta_to = [&](int k) -> const LaurentPoly& {
    while (static_cast<int>(delta_pow.size()) <= k)
      delta_pow.push_back(delta_pow.back() * delta);
    return delta_pow[k];
  };

  SkeinElement out;

  // depth-first resolution; each crossing splits into the A and B smoothing
  struct Frame {
    ArcState arcs;
    ClassMultiset classes;
    int contractible;
    int apow;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({std::move(init), std::move(base_classes), base_contractible, 0, 0});

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.next == crossings.size()) {
      out.add(f.classes, LaurentPoly::monomial(f.apow, 1) * delta_to(f.contractible));
      continue;
    }
    const CrossingPorts& cp = crossings[f.next];
    for (int choice = 0; choice < 2; ++choice) {
      bool a_smoothing = choice == 0;
      Frame g = f;
      g.next = f.next + 1;
      g.apow += a_smoothing ? 1 : -1;
      // over-strand NE-SW: A joins (NW,SW),(NE,SE); over NW-SE: A joins
      // (NW,NE),(SW,SE); B is the other split either way
      bool vertical = cp.positive == a_smoothing;
      int x1 = cp.ends[0], y1 = vertical ? cp.ends[2] : cp.ends[1];
      int x2 = vertical ? cp.ends[1] : cp.ends[2], y2 = cp.ends[3];
      for (auto [x, y] : {std::pair{x1, y1}, std::pair{x2, y2}}) {
        auto cls = g.arcs.join(x, y);
        if (cls) {
          auto [a, b] = normalize_class((*cls)[0], (*cls)[1]);
          if (a == 0 && b == 0) ++g.contractible;
          else ++g.classes[{a, b}];
        }
      }
      stack.push_back(std::move(g));
    }
  }
  return out;
}

TauBracket tau_bracket(const TorusDiagram& d, const SkeinOptions& opt) {
  SkeinElement s = bracket_T(d, opt);
  TauBracket t;
  for (auto& [cls, p] : s.terms()) {
    int zp = 0;
    for (auto& [c, m] : cls) zp += m;
    auto [it, fresh] = t.by_z_power.try_emplace(zp, p);
    if (!fresh) it->second += p;
  }
  return t;
}

std::string TauBracket::str() const {
  if (by_z_power.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = by_z_power.rbegin(); it != by_z_power.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->first == 0) {
      os << "(" << it->second.str() << ")";
    } else {
      os << "(" << it->second.str() << ")*z";
      if (it->first != 1) os << "^" << it->first;
    }
  }
  return os.str();
}

LaurentPoly p2(const SkeinElement& s) {
  LaurentPoly out;
  for (auto& [cls, p] : s.terms()) {
    std::int64_t f = 1;
    for (auto& [c, m] : cls) f <<= m;
    LaurentPoly q = p;
    q *= f;
    out += q;
  }
  return out;
}

SkeinElement multibracket(const TorusDiagram& d, const std::map<int, int>& cheb_degree,
                          const SkeinOptions& opt) {
  validate_or_throw(d);
  std::set<int> comp_set;
  for (auto& [key, comp] : d.components) comp_set.insert(comp);
  std::vector<int> comps(comp_set.begin(), comp_set.end());

  std::vector<std::vector<std::int64_t>> coeffs;
  for (int comp : comps) {
    auto it = cheb_degree.find(comp);
    if (it == cheb_degree.end())
      throw std::invalid_argument("multibracket: missing Chebyshev degree for component " +
                                  std::to_string(comp));
    coeffs.push_back(chebyshev_coeffs(it->second));
  }

  SkeinElement total;
  std::vector<std::size_t> mono(comps.size(), 0);
  for (;;) {
    std::int64_t c = 1;
    for (std::size_t k = 0; k < comps.size(); ++k) c *= coeffs[k][mono[k]];
    if (c != 0) {
      std::map<int, int> sizes;
      for (std::size_t k = 0; k < comps.size(); ++k)
        sizes[comps[k]] = static_cast<int>(mono[k]);
      SkeinElement term = bracket_T(cable(d, sizes), opt);
      LaurentPoly scale = LaurentPoly::monomial(0, c);
      total += term.scaled(scale);
    }
    std::size_t k = 0;
    for (; k < comps.size(); ++k) {
      if (mono[k] + 1 < coeffs[k].size()) { ++mono[k]; break; }
      mono[k] = 0;
    }
    if (k == comps.size()) break;
  }
  return total;
}

InvariantResult jT_su2(const TorusDiagram& d, long n, const RootOfUnity& q,
                       const SkeinOptions& opt) {
  std::map<int, int> degs;
  std::set<int> comp_set;
  for (auto& [key, comp] : d.components) comp_set.insert(comp);
  for (int comp : comp_set) degs[comp] = static_cast<int>(n - 1);

  LaurentPoly poly = p2(multibracket(d, degs, opt));
  WritheData w = writhe(d);

  // A = exp(2 pi i / (4r)), so A^4 = q
  RootOfUnity a4(4 * q.r);
  cplx value{0.0, 0.0};
  for (auto& [e, c] : poly.terms())
    value += double(c) * a4.power(double(e) - double(w.total) * double(n * n - 1));
  if ((n - 1) * w.total % 2 != 0) value = -value;

  InvariantResult res;
  res.value = value;
  res.n = n;
  std::vector<long> colors;
  for (int comp : comp_set) {
    if (static_cast<int>(colors.size()) <= comp) colors.resize(comp + 1, 0);
    colors[comp] = n;
  }
  res.colors = std::move(colors);
  res.r = q.r;
  res.flavor = Flavor::su2_jones;
  res.writhe_data = w;
  double av = std::abs(value);
  res.normalized_log = av > 0 ? 2.0 * RootOfUnity::pi() / double(q.r) * std::log(av) : 0.0;
  return res;
}

std::string skein_to_json(const SkeinElement& s) {
  nlohmann::ordered_json j;
  j["terms"] = nlohmann::ordered_json::array();
  for (auto& [cls, p] : s.terms()) {
    nlohmann::ordered_json jt;
    jt["classes"] = nlohmann::ordered_json::array();
    for (auto& [c, m] : cls) jt["classes"].push_back({c.first, c.second, m});
    jt["poly"] = nlohmann::ordered_json::array();
    for (auto& [e, coeff] : p.terms()) jt["poly"].push_back({e, coeff});
    j["terms"].push_back(jt);
  }
  return j.dump();
}

}  // namespace tcj

#include "tcj/statesum.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tcj {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::sl2_framed: return "sl2_framed";
    case Flavor::sl2_multi: return "sl2_multi";
    case Flavor::sl2_jones: return "sl2_jones";
    case Flavor::su2_jones: return "su2_jones";
  }
  return "?";
}

namespace {

int ceil_log2(long v) {
  int b = 1;
  while ((1L << b) < v) ++b;
  return b;
}

struct NetContext {
  std::map<std::string, int> edge_index;
  std::map<std::string, std::pair<int, int>> tail;  // edge -> (node, port)
  std::map<std::string, std::pair<int, int>> head;
};

NetContext index_edges(const TorusDiagram& d) {
  NetContext ctx;
  for (auto& e : d.edges) {
    int k = static_cast<int>(ctx.edge_index.size());
    ctx.edge_index[e.id] = k;
  }
  for (std::size_t ni = 0; ni < d.nodes.size(); ++ni) {
    const Node& n = d.nodes[ni];
    for (std::size_t p = 0; p < n.ports.size(); ++p) {
      if (port_is_in(n.kind, static_cast<int>(p)))
        ctx.head[n.ports[p]] = {static_cast<int>(ni), static_cast<int>(p)};
      else
        ctx.tail[n.ports[p]] = {static_cast<int>(ni), static_cast<int>(p)};
    }
  }
  return ctx;
}

// Greedy contraction over the live tensor list; mirrors plan_over_signatures
// step for step so plans and executions agree.
template <class R>
SparseTensor<R> run_contraction(std::vector<SparseTensor<R>>& tensors,
                                std::size_t max_entries) {
  std::vector<bool> alive(tensors.size(), true);
  for (;;) {
    int bi = -1, bj = -1, barity = 1 << 30;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < tensors.size(); ++j) {
        if (!alive[j]) continue;
        int shared = 0;
        for (int a : tensors[i].axes)
          if (std::find(tensors[j].axes.begin(), tensors[j].axes.end(), a) !=
              tensors[j].axes.end())
            ++shared;
        if (shared == 0) continue;
        int arity = tensors[i].arity() + tensors[j].arity() - 2 * shared;
        if (arity < barity) { barity = arity; bi = static_cast<int>(i); bj = static_cast<int>(j); }
      }
    }
    if (bi < 0) break;
    SparseTensor<R> merged = contract_pair(tensors[bi], tensors[bj], max_entries);
    merged.resolve_self_traces();
    alive[bi] = alive[bj] = false;
    tensors.push_back(std::move(merged));
    alive.push_back(true);
  }
  // multiply the remaining scalars (separate connected components)
  SparseTensor<R> result;
  result.bits = tensors.empty() ? 8 : tensors[0].bits;
  bool have = false;
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    if (!alive[i]) continue;
    if (!have) {
      result = std::move(tensors[i]);
      have = true;
      continue;
    }
    if (tensors[i].arity() != 0 && result.arity() != 0)
      throw validation_error("network did not contract to a scalar");
    // scalar x tensor
    SparseTensor<R>& t = tensors[i].arity() == 0 ? result : tensors[i];
    SparseTensor<R>& s = tensors[i].arity() == 0 ? tensors[i] : result;
    typename SparseTensor<R>::C sv{};
    if (!s.entries.empty()) sv = s.entries.begin()->second;
    if (s.entries.empty()) { t.entries.clear(); }
    else
      for (auto& [k, v] : t.entries) v *= sv;
    if (&t != &result) result = std::move(t);
    have = true;
  }
  if (!have) {
    result = SparseTensor<R>::make({}, {}, 8);
    result.entries[0] = typename SparseTensor<R>::C{R(1), R(0)};
  }
  return result;
}

template <class R>
SparseTensor<R> contract_network(const TorusDiagram& d, const Coloring& c,
                                 const RootOfUnity& q, const EvalOptions& opt,
                                 const std::string* open_edge) {
  validate_or_throw(d);
  NetContext ctx = index_edges(d);

  long max_color = 1;
  std::set<int> comps;
  for (auto& [key, comp] : d.components) comps.insert(comp);
  for (int comp : comps) {
    long n = c.at(comp);
    if (n < 1 || n > q.r)
      throw validation_error("color out of range 1..r for component " +
                             std::to_string(comp));
    max_color = std::max(max_color, n);
  }
  int bits = ceil_log2(max_color);

  int open_head_axis = -1, open_tail_axis = -1;
  if (open_edge) {
    if (!d.find_edge(*open_edge))
      throw validation_error("open edge not in diagram: " + *open_edge);
    open_head_axis = ctx.edge_index.at(*open_edge);
    open_tail_axis = static_cast<int>(ctx.edge_index.size());
  }

  std::map<long, OperatorSet<R>> opsets;
  auto ops = [&](long n) -> const OperatorSet<R>& {
    auto it = opsets.find(n);
    if (it == opsets.end()) it = opsets.emplace(n, make_operator_set<R>(n, q)).first;
    return it->second;
  };

  auto axis_of = [&](const std::string& eid, bool at_tail) {
    if (open_edge && eid == *open_edge && at_tail) return open_tail_axis;
    return ctx.edge_index.at(eid);
  };

  std::vector<SparseTensor<R>> tensors;
  for (std::size_t ni = 0; ni < d.nodes.size(); ++ni) {
    const Node& n = d.nodes[ni];
    std::vector<int> axes;
    for (std::size_t p = 0; p < n.ports.size(); ++p)
      axes.push_back(axis_of(n.ports[p], !port_is_in(n.kind, static_cast<int>(p))));

    if (is_crossing(n.kind)) {
      long nx = c.at(d.component_of_edge(n.ports[0]));
      long ny = c.at(d.component_of_edge(n.ports[1]));
      if (nx != ny)
        throw validation_error(
            "crossing " + n.id +
            " joins components of different colors; use the cabling expansion");
      auto t = ops(nx).crossing_tensor(n.kind == NodeKind::cross_pos, axes, bits);
      t.resolve_self_traces();
      tensors.push_back(std::move(t));
    } else {
      long nn = c.at(d.component_of_edge(n.ports[0]));
      const auto& os = ops(nn);
      const auto& w = n.kind == NodeKind::cap_e    ? os.cap_e
                      : n.kind == NodeKind::cap_emu ? os.cap_emu
                      : n.kind == NodeKind::cup_n   ? os.cup_n
                                                    : os.cup_nmu;
      auto t = os.diagonal_tensor(w, axes, bits);
      t.resolve_self_traces();
      tensors.push_back(std::move(t));
    }
  }

  SparseTensor<R> result = run_contraction(tensors, opt.max_tensor_entries);

  // bare loops: factor n per parallel copy
  typename SparseTensor<R>::C bare{R(1), R(0)};
  for (std::size_t k = 0; k < d.bare_loops.size(); ++k) {
    long n = c.at(d.component_of_bare(k));
    for (int m = 0; m < d.bare_loops[k].mult; ++m) bare *= R(double(n));
  }
  if (result.arity() == 0 && result.entries.empty())
    result.entries[0] = typename SparseTensor<R>::C{};  // explicit zero scalar
  for (auto& [k, v] : result.entries) v *= bare;
  return result;
}

template <class R>
cplx phi_impl(const TorusDiagram& d, const Coloring& c, const RootOfUnity& q,
              const EvalOptions& opt) {
  auto t = contract_network<R>(d, c, q, opt, nullptr);
  if (t.arity() != 0) throw validation_error("phi: network left open axes");
  auto v = t.entries.empty() ? typename SparseTensor<R>::C{} : t.entries.begin()->second;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

cplx phi(const TorusDiagram& d, const Coloring& c, const RootOfUnity& q,
         const EvalOptions& opt) {
  if (d.empty()) return {1.0, 0.0};
  return opt.extended ? phi_impl<long double>(d, c, q, opt)
                      : phi_impl<double>(d, c, q, opt);
}

ContractionPlan plan_contraction(const TorusDiagram& d) {
  validate_or_throw(d);
  NetContext ctx = index_edges(d);
  std::vector<std::vector<int>> sigs;
  for (auto& n : d.nodes) {
    std::set<int> s;
    std::vector<int> sig;
    for (auto& p : n.ports) {
      int a = ctx.edge_index.at(p);
      if (s.insert(a).second) sig.push_back(a);
      else sig.erase(std::find(sig.begin(), sig.end(), a));  // self-trace
    }
    sigs.push_back(std::move(sig));
  }
  return plan_over_signatures(std::move(sigs));
}

namespace {

InvariantResult make_result(cplx value, long n, std::vector<long> colors, long r,
                            Flavor f, WritheData w) {
  InvariantResult res;
  res.value = value;
  res.n = n;
  res.colors = std::move(colors);
  res.r = r;
  res.flavor = f;
  res.writhe_data = std::move(w);
  double av = std::abs(value);
  res.normalized_log = av > 0 ? 2.0 * RootOfUnity::pi() / double(r) * std::log(av) : 0.0;
  return res;
}

std::vector<long> color_vector(const TorusDiagram& d, const Coloring& c) {
  std::set<int> comps;
  for (auto& [key, comp] : d.components) comps.insert(comp);
  std::vector<long> out;
  for (int comp : comps) {
    if (static_cast<int>(out.size()) <= comp) out.resize(comp + 1, 0);
    out[comp] = c.at(comp);
  }
  return out;
}

bool has_mixed_crossing(const TorusDiagram& d, const Coloring& c) {
  for (auto& n : d.nodes) {
    if (!is_crossing(n.kind)) continue;
    if (c.at(d.component_of_edge(n.ports[0])) != c.at(d.component_of_edge(n.ports[1])))
      return true;
  }
  return false;
}

}  // namespace

InvariantResult jhat_framed(const TorusDiagram& d, const Coloring& c,
                            const RootOfUnity& q, const EvalOptions& opt) {
  cplx v = has_mixed_crossing(d, c) ? jhat_by_cabling(d, c, q, opt) : phi(d, c, q, opt);
  auto colors = color_vector(d, c);
  long n = colors.empty() ? 1 : colors[0];
  for (long x : colors)
    if (x != n) n = 0;
  return make_result(v, n, colors, q.r, Flavor::sl2_framed, writhe(d));
}

InvariantResult jT_multi(const TorusDiagram& d, const Coloring& c,
                         const RootOfUnity& q, const EvalOptions& opt) {
  InvariantResult res = jhat_framed(d, c, q, opt);
  WritheData w = res.writhe_data;
  long double alpha = 0;
  for (auto& [comp, wc] : w.per_component) {
    long n = c.at(comp);
    alpha -= static_cast<long double>(wc) * (static_cast<long double>(n) * n - 1);
  }
  cplx pre = root_power<double>(q.r, alpha / 4.0L);
  return make_result(pre * res.value, res.n, res.colors, q.r, Flavor::sl2_multi, w);
}

InvariantResult jT(const TorusDiagram& d, long n, const RootOfUnity& q,
                   const EvalOptions& opt) {
  Coloring c = Coloring::uniform(d, n);
  cplx v = phi(d, c, q, opt);
  WritheData w = writhe(d);
  long double alpha = -static_cast<long double>(w.total) *
                      (static_cast<long double>(n) * n - 1);
  cplx pre = root_power<double>(q.r, alpha / 4.0L);
  return make_result(pre * v, n, color_vector(d, c), q.r, Flavor::sl2_jones, w);
}

cplx jhat_by_cabling(const TorusDiagram& d, const Coloring& c, const RootOfUnity& q,
                     const EvalOptions& opt) {
  std::set<int> comp_set;
  for (auto& [key, comp] : d.components) comp_set.insert(comp);
  std::vector<int> comps(comp_set.begin(), comp_set.end());

  auto binom = [](long a, long b) {
    if (b < 0 || b > a) return 0.0;
    double acc = 1.0;
    for (long t = 1; t <= b; ++t) acc = acc * double(a - b + t) / double(t);
    return acc;
  };

  cplx total{0.0, 0.0};
  std::vector<long> iv(comps.size(), 0);
  for (;;) {
    double coeff = 1.0;
    std::map<int, int> sizes;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      long n = c.at(comps[k]);
      long i = iv[k];
      coeff *= (i % 2 ? -1.0 : 1.0) * binom(n - 1 - i, i);
      sizes[comps[k]] = static_cast<int>(n - 1 - 2 * i);
    }
    TorusDiagram cab = cable(d, sizes);
    cplx term = cab.empty() ? cplx{1.0, 0.0} : phi(cab, Coloring::uniform(cab, 2), q, opt);
    total += coeff * term;

    // odometer over 0 <= i_k <= (n_k - 1)/2
    std::size_t k = 0;
    for (; k < comps.size(); ++k) {
      long n = c.at(comps[k]);
      if (2 * (iv[k] + 1) <= n - 1) { ++iv[k]; break; }
      iv[k] = 0;
    }
    if (k == comps.size()) break;
  }
  return total;
}

InvariantResult jT_cabled(const TorusDiagram& d, long n, const RootOfUnity& q,
                          const EvalOptions& opt) {
  Coloring c = Coloring::uniform(d, n);
  cplx v = jhat_by_cabling(d, c, q, opt);
  WritheData w = writhe(d);
  long double alpha = -static_cast<long double>(w.total) *
                      (static_cast<long double>(n) * n - 1);
  cplx pre = root_power<double>(q.r, alpha / 4.0L);
  return make_result(pre * v, n, color_vector(d, c), q.r, Flavor::sl2_jones, w);
}

SparseTensor<double> contract_open(const TorusDiagram& d, const Coloring& c,
                                   const RootOfUnity& q, const std::string& open_edge,
                                   const EvalOptions& opt) {
  return contract_network<double>(d, c, q, opt, &open_edge);
}

}  // namespace tcj

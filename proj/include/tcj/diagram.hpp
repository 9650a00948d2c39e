#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcj {

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node kinds of the critical-point graph. Crossings carry four ports in the
// order NW, NE, SW, SE; both strands run downward through a crossing, so NW
// and NE receive and SW and SE emit. A positive crossing is the one whose
// NE-to-SW strand passes over.
//
// Caps (maxima) and cups (minima) carry two ports, W then E. The kind fixes
// the traversal direction and hence which end receives:
//   cap_e:   strand ascends into W, descends out of E      (weight 1)
//   cap_emu: strand ascends into E, descends out of W      (weight mu_i)
//   cup_n:   strand descends into W, ascends out of E      (weight 1)
//   cup_nmu: strand descends into E, ascends out of W      (weight 1/mu_i)
enum class NodeKind { cross_pos, cross_neg, cap_e, cap_emu, cup_n, cup_nmu };

const char* kind_name(NodeKind k);
std::optional<NodeKind> kind_from_name(const std::string& s);
bool is_crossing(NodeKind k);

// Port flow metadata. "in" means the strand arrives at the node through this
// port; "descending" tells whether the attached monotone edge runs downward.
bool port_is_in(NodeKind k, int port);
bool port_is_descending(NodeKind k, int port);
int port_count(NodeKind k);
// For an in-port, the port through which the strand continues.
int port_continuation(NodeKind k, int in_port);

struct Node {
  std::string id;
  NodeKind kind;
  std::vector<std::string> ports;  // edge ids, positional
};

struct Edge {
  std::string id;
  std::array<int, 2> wrap{0, 0};  // fundamental-domain boundary crossings (dx, dy)
};

struct BareLoop {
  std::array<int, 2> cls{0, 0};  // (0,0) or a coprime pair
  int mult = 1;
};

// Critical-point graph of a link diagram on the torus. Geometry is never
// stored; wrap vectors on edges carry all torus topology.
struct TorusDiagram {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<BareLoop> bare_loops;
  // edge id (or "bare_loops/<k>") -> component index
  std::map<std::string, int> components;

  const Node* find_node(const std::string& id) const;
  const Edge* find_edge(const std::string& id) const;
  int component_of_edge(const std::string& edge_id) const;
  int component_of_bare(std::size_t k) const;

  bool empty() const { return nodes.empty() && edges.empty() && bare_loops.empty(); }
};

// Structural validation; empty result means the diagram is well formed.
std::vector<std::string> validate(const TorusDiagram& d);
void validate_or_throw(const TorusDiagram& d);

struct WritheData {
  long total = 0;
  std::map<int, long> per_component;  // self-crossings only
};
WritheData writhe(const TorusDiagram& d);

// Closed strands as ordered edge-id cycles (each edge traversed along its
// orientation exactly once).
std::vector<std::vector<std::string>> strand_loops(const TorusDiagram& d);

// Homology class of a closed strand: sum of its edges' wraps.
std::array<int, 2> loop_class(const TorusDiagram& d, const std::vector<std::string>& loop);

// Blackboard cabling. Components absent from the map keep one copy; a zero
// entry deletes the component. Parallel copies of component j become fresh
// components, numbered deterministically.
TorusDiagram cable(const TorusDiagram& d, const std::map<int, int>& strands);
TorusDiagram cable_uniform(const TorusDiagram& d, int k);

// Move variants used by the invariance suite.
TorusDiagram insert_zigzag(const TorusDiagram& d, const std::string& edge_id,
                           bool mu_side = false);
// Adds a curl (framed Reidemeister I) on a descending edge.
TorusDiagram insert_kink(const TorusDiagram& d, const std::string& edge_id,
                         bool positive);
// Reverses every component's orientation and rotates the diagram by pi; the
// result is a valid all-downward encoding of the reversed link.
TorusDiagram flip(const TorusDiagram& d);
TorusDiagram disjoint_union(const TorusDiagram& a, const TorusDiagram& b);

// JSON schema (exact field names), strict loader.
std::string to_json(const TorusDiagram& d);
TorusDiagram from_json(const std::string& text);

}  // namespace tcj

#pragma once
// Directed acyclic graph core: canonical topological order, filtered
// reachability, lexicographic path search, edge-disjoint path pairs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dunet {

using NodeId = int32_t;  // dense 0..node_count-1
using EdgeId = int32_t;  // dense 0..edge_count-1; parallel edges distinct

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CycleDetected : Error {
  CycleDetected() : Error("CycleDetected: graph has a directed cycle") {}
};
struct NotOnPath : Error {
  explicit NotOnPath(const std::string& m) : Error("NotOnPath: " + m) {}
};
struct EndpointMismatch : Error {
  explicit EndpointMismatch(const std::string& m)
      : Error("EndpointMismatch: " + m) {}
};

struct Edge {
  EdgeId id;
  NodeId tail;
  NodeId head;
};

// Edge slots keep their ids for the whole lifetime; without() masks an edge
// out of the adjacency without renumbering the others.
class Dag {
 public:
  Dag() = default;
  Dag(NodeId node_count, const std::vector<std::pair<NodeId, NodeId>>& arcs);

  NodeId node_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  bool alive(EdgeId e) const { return alive_.at(e) != 0; }
  const std::vector<EdgeId>& out_edges(NodeId v) const { return out_.at(v); }
  const std::vector<EdgeId>& in_edges(NodeId v) const { return in_.at(v); }
  Dag without(EdgeId e) const;

 private:
  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<uint8_t> alive_;
  std::vector<std::vector<EdgeId>> out_, in_;
  void build_adjacency();
};

// Contiguous edge walk. A zero-edge path is a single node.
struct Path {
  NodeId start = 0;
  std::vector<EdgeId> edges;

  NodeId end(const Dag& d) const {
    return edges.empty() ? start : d.edge(edges.back()).head;
  }
  std::vector<NodeId> nodes(const Dag& d) const;
};

bool operator==(const Path& a, const Path& b);
inline bool operator!=(const Path& a, const Path& b) { return !(a == b); }

// Two unit-rate sessions (s1,t1), (s2,t2) over one dag. s1==s2 or t1==t2 is
// allowed; si==ti is not. Connectivity is not required here.
struct DoubleUnicastNet {
  Dag dag;
  NodeId s1 = 0, s2 = 0, t1 = 0, t2 = 0;

  static DoubleUnicastNet make(Dag dag, NodeId s1, NodeId s2, NodeId t1,
                               NodeId t2);
};

// Kahn's algorithm with a min-heap on NodeId: ties break toward the smaller
// id, so the order is a pure function of the graph.
std::vector<NodeId> topological_order(const Dag& d);

// Indicator over nodes reachable from `sources` without using forbidden
// edges or entering forbidden nodes (a forbidden source is not entered).
std::vector<char> reachable_from(const Dag& d,
                                 const std::vector<NodeId>& sources,
                                 const std::vector<EdgeId>& forbidden_edges = {},
                                 const std::vector<NodeId>& forbidden_nodes = {});

// Indicator over nodes that reach some target (reverse closure), without
// using forbidden edges.
std::vector<char> reachable_to(const Dag& d, const std::vector<NodeId>& targets,
                               const std::vector<EdgeId>& forbidden_edges = {});

// Lexicographically smallest EdgeId sequence from->to, or nullopt.
// Forbidden nodes block transit but exempt the endpoints, except that
// from==to with that node forbidden yields nullopt.
std::optional<Path> find_path(const Dag& d, NodeId from, NodeId to,
                              const std::vector<EdgeId>& forbidden_edges = {},
                              const std::vector<NodeId>& forbidden_nodes = {});

// Sub-path of p from node vj to node vk (both must lie on p, vj before vk).
Path section(const Dag& d, const Path& p, NodeId vj, NodeId vk);

// Concatenation; b must start where a ends.
Path concat(const Dag& d, const Path& a, const Path& b);

// Exact test and canonical extraction of an edge-disjoint pair
// (s1->t1, s2->t2): p1 is the lexicographically smallest (s1,t1) path that
// still admits a disjoint completion, p2 the smallest (s2,t2) path avoiding
// p1. Token-pair dynamic program over edges, advancing the token whose
// position is earlier in topological order.
std::optional<std::pair<Path, Path>> two_edge_disjoint_paths(
    const DoubleUnicastNet& net);

}  // namespace dunet

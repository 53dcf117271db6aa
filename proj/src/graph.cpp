#include "dunet/graph.hpp"

#include <algorithm>
#include <queue>

namespace dunet {

Dag::Dag(NodeId node_count, const std::vector<std::pair<NodeId, NodeId>>& arcs)
    : n_(node_count) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  edges_.reserve(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i) {
    auto [a, b] = arcs[i];
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    edges_.push_back(Edge{static_cast<EdgeId>(i), a, b});
  }
  alive_.assign(edges_.size(), 1);
  build_adjacency();
}

void Dag::build_adjacency() {
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (const Edge& e : edges_) {
    if (!alive_[e.id]) continue;
    out_[e.tail].push_back(e.id);
    in_[e.head].push_back(e.id);
  }
  // EdgeId order makes every adjacency scan canonical.
  for (auto& v : out_) std::sort(v.begin(), v.end());
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

Dag Dag::without(EdgeId e) const {
  Dag d = *this;
  d.alive_.at(e) = 0;
  d.build_adjacency();
  return d;
}

std::vector<NodeId> Path::nodes(const Dag& d) const {
  std::vector<NodeId> ns{start};
  ns.reserve(edges.size() + 1);
  for (EdgeId e : edges) ns.push_back(d.edge(e).head);
  return ns;
}

bool operator==(const Path& a, const Path& b) {
  return a.start == b.start && a.edges == b.edges;
}

DoubleUnicastNet DoubleUnicastNet::make(Dag dag, NodeId s1, NodeId s2,
                                        NodeId t1, NodeId t2) {
  const NodeId n = dag.node_count();
  for (NodeId v : {s1, s2, t1, t2})
    if (v < 0 || v >= n) throw std::invalid_argument("role node out of range");
  if (s1 == t1 || s2 == t2)
    throw std::invalid_argument("a session's source equals its terminal");
  return DoubleUnicastNet{std::move(dag), s1, s2, t1, t2};
}

std::vector<NodeId> topological_order(const Dag& d) {
  std::vector<int32_t> indeg(d.node_count(), 0);
  for (EdgeId e = 0; e < d.edge_count(); ++e)
    if (d.alive(e)) ++indeg[d.edge(e).head];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> heap;
  for (NodeId v = 0; v < d.node_count(); ++v)
    if (indeg[v] == 0) heap.push(v);
  std::vector<NodeId> order;
  order.reserve(d.node_count());
  while (!heap.empty()) {
    NodeId v = heap.top();
    heap.pop();
    order.push_back(v);
    for (EdgeId e : d.out_edges(v))
      if (--indeg[d.edge(e).head] == 0) heap.push(d.edge(e).head);
  }
  if (static_cast<NodeId>(order.size()) != d.node_count())
    throw CycleDetected();
  return order;
}

namespace {

std::vector<char> edge_mask(const Dag& d, const std::vector<EdgeId>& es) {
  std::vector<char> m(d.edge_count(), 0);
  for (EdgeId e : es) m.at(e) = 1;
  return m;
}

std::vector<char> node_mask(const Dag& d, const std::vector<NodeId>& vs) {
  std::vector<char> m(d.node_count(), 0);
  for (NodeId v : vs) m.at(v) = 1;
  return m;
}

}  // namespace

std::vector<char> reachable_from(const Dag& d,
                                 const std::vector<NodeId>& sources,
                                 const std::vector<EdgeId>& forbidden_edges,
                                 const std::vector<NodeId>& forbidden_nodes) {
  const auto be = edge_mask(d, forbidden_edges);
  const auto bn = node_mask(d, forbidden_nodes);
  std::vector<char> seen(d.node_count(), 0);
  std::vector<NodeId> stack;
  for (NodeId s : sources) {
    if (bn[s] || seen[s]) continue;
    seen[s] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : d.out_edges(v)) {
      if (be[e]) continue;
      NodeId w = d.edge(e).head;
      if (bn[w] || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

std::vector<char> reachable_to(const Dag& d, const std::vector<NodeId>& targets,
                               const std::vector<EdgeId>& forbidden_edges) {
  const auto be = edge_mask(d, forbidden_edges);
  std::vector<char> seen(d.node_count(), 0);
  std::vector<NodeId> stack;
  for (NodeId t : targets) {
    if (seen[t]) continue;
    seen[t] = 1;
    stack.push_back(t);
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : d.in_edges(v)) {
      if (be[e]) continue;
      NodeId w = d.edge(e).tail;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::optional<Path> find_path(const Dag& d, NodeId from, NodeId to,
                              const std::vector<EdgeId>& forbidden_edges,
                              const std::vector<NodeId>& forbidden_nodes) {
  const auto be = edge_mask(d, forbidden_edges);
  const auto bn = node_mask(d, forbidden_nodes);
  if (from == to) {
    if (bn[from]) return std::nullopt;
    return Path{from, {}};
  }
  // can_reach[v]: a path v->to exists whose interior avoids forbidden nodes.
  std::vector<char> can_reach(d.node_count(), 0);
  can_reach[to] = 1;
  std::vector<NodeId> stack{to};
  while (!stack.empty()) {
    NodeId b = stack.back();
    stack.pop_back();
    if (b != to && bn[b]) continue;  // b itself cannot be transited
    for (EdgeId e : d.in_edges(b)) {
      if (be[e]) continue;
      NodeId a = d.edge(e).tail;
      if (!can_reach[a]) {
        can_reach[a] = 1;
        stack.push_back(a);
      }
    }
  }
  Path p{from, {}};
  NodeId cur = from;
  while (cur != to) {
    EdgeId step = -1;
    for (EdgeId e : d.out_edges(cur)) {
      if (be[e]) continue;
      NodeId h = d.edge(e).head;
      if (h != to && bn[h]) continue;
      if (can_reach[h]) {
        step = e;
        break;
      }
    }
    if (step < 0) return std::nullopt;
    p.edges.push_back(step);
    cur = d.edge(step).head;
  }
  return p;
}

Path section(const Dag& d, const Path& p, NodeId vj, NodeId vk) {
  const auto ns = p.nodes(d);
  auto it_j = std::find(ns.begin(), ns.end(), vj);
  if (it_j == ns.end()) throw NotOnPath("section start not on path");
  auto it_k = std::find(it_j, ns.end(), vk);
  if (it_k == ns.end()) {
    if (std::find(ns.begin(), ns.end(), vk) == ns.end())
      throw NotOnPath("section end not on path");
    throw NotOnPath("section end precedes section start");
  }
  size_t j = static_cast<size_t>(it_j - ns.begin());
  size_t k = static_cast<size_t>(it_k - ns.begin());
  Path out{vj, {}};
  out.edges.assign(p.edges.begin() + j, p.edges.begin() + k);
  return out;
}

Path concat(const Dag& d, const Path& a, const Path& b) {
  if (a.end(d) != b.start)
    throw EndpointMismatch("second path does not start at first path's end");
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

namespace {

// Token-pair reachability: token1 walks start1->t1, token2 walks s2->t2,
// never standing on the same edge; token2 additionally avoids banned2.
// Each token is identified by its current edge (-1 = not yet departed).
// The token whose position comes earlier in topological order moves, so a
// shared edge is always caught while the earlier token still occupies it.
class DisjointPairSearch {
 public:
  DisjointPairSearch(const Dag& d, const std::vector<int32_t>& tidx, NodeId t1,
                     NodeId s2, NodeId t2)
      : d_(d), tidx_(tidx), t1_(t1), s2_(s2), t2_(t2) {
    memo_.assign((d.edge_count() + 1) * (d.edge_count() + 1), -1);
  }

  void set_banned2(const std::vector<char>& banned2) {
    banned2_ = banned2;
    std::fill(memo_.begin(), memo_.end(), -1);
  }

  bool feasible(NodeId start1) {
    start1_ = start1;
    std::fill(memo_.begin(), memo_.end(), -1);
    return run(-1, -1);
  }

 private:
  bool run(EdgeId a, EdgeId b) {
    int8_t& slot = memo_[(a + 1) * (d_.edge_count() + 1) + (b + 1)];
    if (slot >= 0) return slot != 0;
    NodeId pa = a < 0 ? start1_ : d_.edge(a).head;
    NodeId pb = b < 0 ? s2_ : d_.edge(b).head;
    bool da = pa == t1_, db = pb == t2_;
    bool r = false;
    if (da && db) {
      r = true;
    } else {
      bool move_a = da ? false : (db ? true : tidx_[pa] <= tidx_[pb]);
      if (move_a) {
        for (EdgeId e : d_.out_edges(pa)) {
          if (e == b) continue;
          if (run(e, b)) {
            r = true;
            break;
          }
        }
      } else {
        for (EdgeId e : d_.out_edges(pb)) {
          if (e == a || (!banned2_.empty() && banned2_[e])) continue;
          if (run(a, e)) {
            r = true;
            break;
          }
        }
      }
    }
    slot = r ? 1 : 0;
    return r;
  }

  const Dag& d_;
  const std::vector<int32_t>& tidx_;
  NodeId t1_, s2_, t2_, start1_ = 0;
  std::vector<char> banned2_;
  std::vector<int8_t> memo_;
};

}  // namespace

std::optional<std::pair<Path, Path>> two_edge_disjoint_paths(
    const DoubleUnicastNet& net) {
  const Dag& d = net.dag;
  const auto order = topological_order(d);
  std::vector<int32_t> tidx(d.node_count());
  for (size_t i = 0; i < order.size(); ++i)
    tidx[order[i]] = static_cast<int32_t>(i);
  DisjointPairSearch search(d, tidx, net.t1, net.s2, net.t2);
  if (!search.feasible(net.s1)) return std::nullopt;
  // Greedy lex-min p1, keeping a disjoint completion available at each step.
  Path p1{net.s1, {}};
  std::vector<char> used(d.edge_count(), 0);
  NodeId cur = net.s1;
  while (cur != net.t1) {
    EdgeId step = -1;
    for (EdgeId e : d.out_edges(cur)) {
      if (used[e]) continue;
      used[e] = 1;
      search.set_banned2(used);
      bool ok = search.feasible(d.edge(e).head);
      if (ok) {
        step = e;
        break;
      }
      used[e] = 0;
    }
    if (step < 0) return std::nullopt;  // unreachable: feasibility held
    p1.edges.push_back(step);
    cur = d.edge(step).head;
  }
  auto p2 = find_path(d, net.s2, net.t2, p1.edges);
  if (!p2) return std::nullopt;  // unreachable for the same reason
  return std::make_pair(std::move(p1), std::move(*p2));
}

}  // namespace dunet

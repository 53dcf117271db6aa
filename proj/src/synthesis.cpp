#include "dunet/synthesis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "dunet/feasibility.hpp"

namespace dunet {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I:
      return "I";
    case CaseTag::IIA:
      return "IIA";
    case CaseTag::IIBi:
      return "IIB(i)";
    case CaseTag::IIBii:
      return "IIB(ii)";
    case CaseTag::IIBiii:
      return "IIB(iii)";
  }
  return "?";
}

int StemDecomposition::stem_position(NodeId v) const {
  if (v == n1) return 0;
  for (size_t i = 0; i < interior.size(); ++i)
    if (interior[i] == v) return static_cast<int>(i) + 1;
  if (v == nk) return static_cast<int>(interior.size()) + 1;
  return -1;
}

namespace {

bool connected_without(const Dag& d, NodeId a, NodeId b, EdgeId removed) {
  return reachable_from(d, {a}, {removed})[b] != 0;
}

}  // namespace

StemDecomposition find_stem(const DoubleUnicastNet& net) {
  auto base = find_path(net.dag, net.s1, net.t1);
  auto other = find_path(net.dag, net.s2, net.t2);
  if (!base || !other)
    throw CaseMismatch("a session is disconnected");
  if (two_edge_disjoint_paths(net))
    throw CaseMismatch("edge-disjoint session paths exist");
  const Dag& d = net.dag;
  auto order = topological_order(d);
  std::vector<int32_t> tidx(d.node_count());
  for (size_t i = 0; i < order.size(); ++i)
    tidx[order[i]] = static_cast<int32_t>(i);

  Path p = *base;
  NodeId n1 = -1, nk = -1;
  int reroutes = 0;
  const int iteration_cap = 4 * d.node_count() + 8;
  for (int iter = 0;; ++iter) {
    if (iter > iteration_cap)
      throw CaseMismatch("stem search did not settle");
    auto pn = p.nodes(d);
    auto from_s2 = reachable_from(d, {net.s2});
    n1 = -1;
    for (NodeId v : pn) {
      if (from_s2[v]) {
        n1 = v;
        break;
      }
    }
    if (n1 < 0) throw CaseMismatch("s2 reaches no node of the session-1 path");
    auto from_s1 = reachable_from(d, {net.s1});
    auto into_n1 = reachable_to(d, {n1});
    NodeId w = -1;
    for (NodeId v = 0; v < d.node_count(); ++v) {
      if (v == n1 || !from_s1[v] || !from_s2[v] || !into_n1[v]) continue;
      if (w < 0 || tidx[v] < tidx[w]) w = v;
    }
    if (w >= 0) {
      // Pull the path through the earlier joint-entry node w.
      Path head = *find_path(d, net.s1, w);
      Path mid = *find_path(d, w, n1);
      p = concat(d, concat(d, head, mid), section(d, p, n1, net.t1));
      ++reroutes;
      continue;
    }
    auto into_t2 = reachable_to(d, {net.t2});
    nk = -1;
    for (NodeId v : pn)
      if (into_t2[v]) nk = v;
    if (nk < 0) throw CaseMismatch("no node of the session-1 path reaches t2");
    auto into_t1 = reachable_to(d, {net.t1});
    auto from_nk = reachable_from(d, {nk});
    w = -1;
    for (NodeId v = 0; v < d.node_count(); ++v) {
      if (v == nk || !from_nk[v] || !into_t1[v] || !into_t2[v]) continue;
      if (w < 0 || tidx[v] < tidx[w]) w = v;
    }
    if (w >= 0) {
      // Extend the path through the later joint-exit node w.
      Path mid = *find_path(d, nk, w);
      Path tail = *find_path(d, w, net.t1);
      p = concat(d, concat(d, section(d, p, net.s1, nk), mid), tail);
      ++reroutes;
      continue;
    }
    break;
  }

  auto pn = p.nodes(d);
  size_t i1 = std::find(pn.begin(), pn.end(), n1) - pn.begin();
  size_t ik = std::find(pn.begin(), pn.end(), nk) - pn.begin();
  if (!(i1 < ik))
    throw CaseMismatch("contact entry does not precede contact exit");
  StemDecomposition stem;
  stem.p = p;
  stem.n1 = n1;
  stem.nk = nk;
  stem.prefix = section(d, p, net.s1, n1);
  stem.stem = section(d, p, n1, nk);
  stem.suffix = section(d, p, nk, net.t1);
  auto stem_nodes = stem.stem.nodes(d);
  stem.interior.assign(stem_nodes.begin() + 1, stem_nodes.end() - 1);
  auto t1b = find_path(d, net.s2, n1);
  auto t2b = find_path(d, nk, net.t2);
  if (!t1b || !t2b) throw CaseMismatch("contact branches missing");
  stem.t1_branch = *t1b;
  stem.t2_branch = *t2b;
  stem.reroutes = reroutes;
  return stem;
}

std::vector<EdgeId> edges_cutting_both(const DoubleUnicastNet& net,
                                       const StemDecomposition& stem) {
  std::vector<EdgeId> out;
  for (EdgeId e : stem.stem.edges) {
    bool d11 = !connected_without(net.dag, net.s1, net.t1, e);
    bool d22 = !connected_without(net.dag, net.s2, net.t2, e);
    bool c12 = connected_without(net.dag, net.s1, net.t2, e);
    bool c21 = connected_without(net.dag, net.s2, net.t1, e);
    if (d11 && d22 && c12 && c21) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NetworkCode CodePlan::lower(EdgeId edge_count) const {
  // One membership mask per distinct vector: repeats of the same vector on
  // an edge collapse, distinct vectors XOR.
  std::map<int, std::vector<char>> member;
  for (const auto& [vec, edges] : groups) {
    auto& m = member[vec.a * 2 + vec.b];
    if (m.empty()) m.assign(edge_count, 0);
    for (EdgeId e : edges) m.at(e) = 1;
  }
  NetworkCode code;
  code.coeff.assign(edge_count, kZero);
  for (const auto& [key, m] : member) {
    Gf2Vec2 vec{uint8_t(key >> 1), uint8_t(key & 1)};
    for (EdgeId e = 0; e < edge_count; ++e)
      if (m[e]) code.coeff[e] = code.coeff[e] ^ vec;
  }
  return code;
}

CodePlan butterfly_plan(const DoubleUnicastNet& net,
                        const StemDecomposition& stem) {
  const Dag& d = net.dag;
  auto below_n1 = reachable_from(d, {stem.n1});
  auto above_nk = reachable_to(d, {stem.nk});
  std::vector<NodeId> between;
  for (NodeId v = 0; v < d.node_count(); ++v)
    if ((below_n1[v] && above_nk[v]) || v == stem.n1 || v == stem.nk)
      between.push_back(v);
  auto u1 = find_path(d, net.s1, net.t2, {}, between);
  auto u2 = find_path(d, net.s2, net.t1, {}, between);
  if (!u1 || !u2)
    throw PlanInfeasible("no cross delivery path around the contact region");
  CodePlan plan;
  plan.groups.push_back({kX1, stem.prefix.edges});
  plan.groups.push_back({kX1, u1->edges});
  plan.groups.push_back({kX2, stem.t1_branch.edges});
  plan.groups.push_back({kX2, u2->edges});
  plan.groups.push_back({kX1X2, stem.stem.edges});
  plan.groups.push_back({kX1X2, stem.t2_branch.edges});
  plan.groups.push_back({kX1X2, stem.suffix.edges});
  return plan;
}

HandleChain handle_chain(const DoubleUnicastNet& net,
                         const StemDecomposition& stem, CaseTag which) {
  if (which != CaseTag::IIBi && which != CaseTag::IIBii)
    throw CaseMismatch("handle_chain requires a chain case");
  const Dag& d = net.dag;
  const bool mirrored = which == CaseTag::IIBii;
  const NodeId src = mirrored ? net.s2 : net.s1;
  const NodeId own_t = mirrored ? net.t2 : net.t1;
  const auto& stem_edges = stem.stem.edges;
  auto stem_nodes = stem.stem.nodes(d);

  auto reach = reachable_from(d, {src}, stem_edges);
  if (reach[own_t])
    throw ChainStuck("chain source reaches its own terminal off-stem");
  NodeId m0 = -1;
  for (NodeId v : stem.interior)
    if (reach[v]) m0 = v;
  if (m0 < 0) throw ChainStuck("chain source does not touch the stem interior");

  HandleChain ch;
  ch.mirrored = mirrored;
  ch.v = {stem.n1, m0};
  ch.u = {-1, src};
  ch.q.push_back(Path{stem.n1, {}});  // placeholder keeping q[i] = handle i
  ch.q.push_back(*find_path(d, src, m0, stem_edges));

  const size_t guard = stem_nodes.size() + 4;
  for (size_t step = 0; step < guard; ++step) {
    if (ch.v.back() == net.t1 || ch.v.back() == net.t2) break;
    const int i = static_cast<int>(ch.v.size());  // index being built
    const int lo = stem.stem_position(ch.v[i - 2]);
    const int hi = stem.stem_position(ch.v[i - 1]);
    std::vector<NodeId> window;
    for (int pos = lo + 1; pos < hi; ++pos) window.push_back(stem_nodes[pos]);
    if (window.empty()) throw ChainStuck("empty handle window");
    auto from_window = reachable_from(d, window, stem_edges);
    const bool t1r = from_window[net.t1] != 0;
    const bool t2r = from_window[net.t2] != 0;
    NodeId vi = -1;
    if (t1r || t2r) {
      if (t1r && t2r) {
        // Both terminals in reach: pick the one matching the alternation
        // the labels need for a chain of this length.
        const bool even = i % 2 == 0;
        vi = mirrored ? (even ? net.t2 : net.t1) : (even ? net.t1 : net.t2);
      } else {
        vi = t1r ? net.t1 : net.t2;
      }
    } else {
      for (NodeId v : stem.interior)
        if (stem.stem_position(v) > hi && from_window[v]) vi = v;
      if (vi < 0) throw ChainStuck("no further stem contact from window");
    }
    NodeId ui = -1;
    for (NodeId w : window) {
      if (reachable_from(d, {w}, stem_edges)[vi]) {
        ui = w;
        break;
      }
    }
    if (ui < 0) throw ChainStuck("no window node reaches the next contact");
    ch.v.push_back(vi);
    ch.u.push_back(ui);
    ch.q.push_back(*find_path(d, ui, vi, stem_edges));
  }
  if (ch.v.back() != net.t1 && ch.v.back() != net.t2)
    throw ChainStuck("chain did not reach a terminal");
  ch.terminal = ch.v.back();
  return ch;
}

namespace {

Gf2Vec2 label_before(Gf2Vec2 s, bool mirrored) {
  // Three-label cycle stepped backwards along the stem.
  if (!mirrored) {
    if (s == kX2) return kX1X2;
    if (s == kX1X2) return kX1;
    return kX2;  // s == kX1
  }
  if (s == kX1) return kX1X2;
  if (s == kX1X2) return kX2;
  return kX1;  // s == kX2
}

}  // namespace

std::vector<Gf2Vec2> segment_labels(const DoubleUnicastNet& net,
                                    const HandleChain& chain) {
  const int count = chain.length();
  if (count < 1) throw PlanInfeasible("empty chain");
  std::vector<Gf2Vec2> labels(count);
  labels[count - 1] = chain.terminal == net.t1 ? kX2 : kX1;
  for (int j = count - 2; j >= 1; --j)
    labels[j] = label_before(labels[j + 1], chain.mirrored);
  if (count >= 2) {
    Gf2Vec2 first = label_before(labels[1], chain.mirrored);
    // The entry node can feed only its own source symbol or the pair XOR.
    const Gf2Vec2 bad = chain.mirrored ? kX2 : kX1;
    if (first == bad) first = chain.mirrored ? kX1 : kX2;
    labels[0] = first;
  }
  return labels;
}

CodePlan grail_plan(const DoubleUnicastNet& net, const StemDecomposition& stem,
                    const HandleChain& chain) {
  auto labels = segment_labels(net, chain);
  const int count = chain.length();
  CodePlan plan;
  auto add = [&plan](Gf2Vec2 label, const std::vector<EdgeId>& edges) {
    if (label == kZero || edges.empty()) return;
    plan.groups.push_back({label, edges});
  };
  if (labels[0].a) add(kX1, stem.prefix.edges);
  if (labels[0].b) add(kX2, stem.t1_branch.edges);

  std::vector<NodeId> delim(chain.v.begin(), chain.v.end() - 1);
  delim.push_back(stem.nk);
  const auto& stem_edges = stem.stem.edges;
  for (int j = 0; j < count; ++j) {
    int a = stem.stem_position(delim[j]);
    int b = stem.stem_position(delim[j + 1]);
    std::vector<EdgeId> seg(stem_edges.begin() + a, stem_edges.begin() + b);
    add(labels[j], seg);
  }
  add(labels[count - 1], stem.suffix.edges);
  add(labels[count - 1], stem.t2_branch.edges);

  const Gf2Vec2 q1_label = chain.mirrored ? kX2 : kX1;
  const NodeId cross_t = chain.mirrored ? net.t1 : net.t2;
  bool merged = false;
  if (count == 2 && chain.terminal == cross_t) {
    // The two handles may share a tail section; everything from the first
    // shared edge on carries the XOR of both handle labels, which is what
    // the divergence points can actually feed.
    std::set<EdgeId> q1set(chain.q[1].edges.begin(), chain.q[1].edges.end());
    size_t f1 = chain.q[1].edges.size(), f2 = chain.q[2].edges.size();
    for (size_t i = 0; i < chain.q[2].edges.size(); ++i) {
      if (q1set.count(chain.q[2].edges[i])) {
        f2 = i;
        break;
      }
    }
    if (f2 < chain.q[2].edges.size()) {
      std::set<EdgeId> shared;
      std::set<EdgeId> q2set(chain.q[2].edges.begin(), chain.q[2].edges.end());
      for (EdgeId e : chain.q[1].edges)
        if (q2set.count(e)) shared.insert(e);
      for (size_t i = 0; i < chain.q[1].edges.size(); ++i) {
        if (shared.count(chain.q[1].edges[i])) {
          f1 = i;
          break;
        }
      }
      const auto& e1v = chain.q[1].edges;
      const auto& e2v = chain.q[2].edges;
      add(q1_label, std::vector<EdgeId>(e1v.begin(), e1v.begin() + f1));
      add(labels[0], std::vector<EdgeId>(e2v.begin(), e2v.begin() + f2));
      Gf2Vec2 mix = q1_label ^ labels[0];
      add(mix, std::vector<EdgeId>(e1v.begin() + f1, e1v.end()));
      add(mix, std::vector<EdgeId>(e2v.begin() + f2, e2v.end()));
      merged = true;
    }
  }
  if (!merged) {
    for (int i = 1; i <= count; ++i) {
      Gf2Vec2 label = i == 1 ? q1_label : labels[i - 2];
      add(label, chain.q[i].edges);
    }
  }
  return plan;
}

std::pair<DoubleUnicastNet, EdgeId> reduce_iib_iii(
    const DoubleUnicastNet& net, const StemDecomposition& stem) {
  const Dag& d = net.dag;
  const auto& stem_edges = stem.stem.edges;
  auto r1 = reachable_from(d, {net.s1}, stem_edges);
  auto r2 = reachable_from(d, {net.s2}, stem_edges);
  NodeId m01 = -1, m02 = -1;
  for (NodeId v : stem.interior) {
    if (r1[v]) m01 = v;
    if (r2[v]) m02 = v;
  }
  if (m01 < 0 || m02 < 0)
    throw ReductionStuck("a source has no off-stem contact with the interior");
  EdgeId removed = -1;
  if (stem.stem_position(m01) >= stem.stem_position(m02)) {
    auto probe = find_path(d, net.s2, m02, stem_edges);
    std::set<EdgeId> keep(stem.t1_branch.edges.begin(),
                          stem.t1_branch.edges.end());
    for (EdgeId e : probe->edges) {
      if (!keep.count(e)) {
        removed = e;
        break;
      }
    }
  } else {
    auto probe = find_path(d, net.s1, m01, stem_edges);
    std::set<EdgeId> keep(stem.prefix.edges.begin(), stem.prefix.edges.end());
    for (EdgeId e : probe->edges) {
      if (!keep.count(e)) {
        removed = e;
        break;
      }
    }
  }
  if (removed < 0)
    throw ReductionStuck("probe path never leaves its entry branch");
  DoubleUnicastNet reduced{d.without(removed), net.s1, net.s2, net.t1, net.t2};
  return {reduced, removed};
}

namespace {

void synth_core(const DoubleUnicastNet& net, SynthesisResult& res) {
  const EdgeId edge_count = net.dag.edge_count();
  auto disjoint = two_edge_disjoint_paths(net);
  if (disjoint) {
    res.case_tag = CaseTag::I;
    res.routing = disjoint;
    CodePlan plan;
    plan.groups.push_back({kX1, disjoint->first.edges});
    plan.groups.push_back({kX2, disjoint->second.edges});
    res.code = plan.lower(edge_count);
    return;
  }
  DoubleUnicastNet work = net;
  std::vector<EdgeId> removed;
  while (true) {
    if (!removed.empty()) {
      if (!feasible_11(work))
        throw ReductionStuck("reduced net gained a blocking edge");
      auto dis2 = two_edge_disjoint_paths(work);
      if (dis2) {
        res.case_tag = CaseTag::I;
        res.routing = dis2;
        CodePlan plan;
        plan.groups.push_back({kX1, dis2->first.edges});
        plan.groups.push_back({kX2, dis2->second.edges});
        res.code = plan.lower(edge_count);
        break;
      }
    }
    auto stem = find_stem(work);
    auto cut_both = edges_cutting_both(work, stem);
    if (!cut_both.empty()) {
      res.case_tag = CaseTag::IIA;
      res.code = butterfly_plan(work, stem).lower(edge_count);
      res.stem = stem;
      break;
    }
    EdgeId e1 = stem.stem.edges.front();
    bool k11 = !connected_without(work.dag, work.s1, work.t1, e1);
    bool k22 = !connected_without(work.dag, work.s2, work.t2, e1);
    if (k11 && k22)
      throw PlanInfeasible("first stem edge cuts both sessions yet escaped "
                           "the cut set");
    if (k11 || k22) {
      CaseTag which = k22 ? CaseTag::IIBi : CaseTag::IIBii;
      auto chain = handle_chain(work, stem, which);
      res.labels = segment_labels(work, chain);
      res.code = grail_plan(work, stem, chain).lower(edge_count);
      res.case_tag = which;
      res.stem = stem;
      res.chain = chain;
      break;
    }
    if (removed.size() >= static_cast<size_t>(edge_count))
      throw ReductionStuck("edge removals did not terminate");
    auto [reduced, gone] = reduce_iib_iii(work, stem);
    work = reduced;
    removed.push_back(gone);
  }
  res.removed_edges = removed;
  if (!removed.empty()) {
    res.case_tag = CaseTag::IIBiii;
    res.reduced = work;
  }
}

bool is_fallback_trigger(const Error& e) {
  return dynamic_cast<const CaseMismatch*>(&e) != nullptr ||
         dynamic_cast<const PlanInfeasible*>(&e) != nullptr ||
         dynamic_cast<const ChainStuck*>(&e) != nullptr ||
         dynamic_cast<const ReductionStuck*>(&e) != nullptr;
}

}  // namespace

SynthesisResult synthesize(const DoubleUnicastNet& net,
                           const OracleConfig& oracle_config) {
  auto pc = pair_connectivity(net);
  if (!pc.c11 || !pc.c22)
    throw PairDisconnected("synthesize requires both sessions connected");
  if (!feasible_11(net))
    throw Infeasible("a blocking edge caps the sum rate at 1");
  SynthesisResult res;
  try {
    synth_core(net, res);
    if (!verify(net, res.code).valid)
      throw PlanInfeasible("synthesized code failed verification");
  } catch (const Error& e) {
    if (!is_fallback_trigger(e)) throw;
    res.used_fallback = true;
    res.fallback_reason = e.what();
    auto oc = exhaustive_scalar_codes(net, oracle_config);
    if (!oc)
      throw std::logic_error(
          "exhaustive search found no code for an unblocked network");
    res.code = *oc;
  }
  return res;
}

}  // namespace dunet

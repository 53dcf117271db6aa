#include "dunet/oracle.hpp"

#include <algorithm>

#include "dunet/feasibility.hpp"

namespace dunet {

namespace {

struct Searcher {
  const DoubleUnicastNet& net;
  const OracleConfig& config;
  std::vector<EdgeId> eorder;
  std::vector<Gf2Vec2> coeff;
  std::vector<char> assigned;
  uint64_t explored = 0;

  explicit Searcher(const DoubleUnicastNet& n, const OracleConfig& c)
      : net(n), config(c) {
    auto order = topological_order(net.dag);
    std::vector<int32_t> tidx(net.dag.node_count());
    for (size_t i = 0; i < order.size(); ++i)
      tidx[order[i]] = static_cast<int32_t>(i);
    for (EdgeId e = 0; e < net.dag.edge_count(); ++e)
      if (net.dag.alive(e)) eorder.push_back(e);
    std::sort(eorder.begin(), eorder.end(), [&](EdgeId a, EdgeId b) {
      return std::make_pair(tidx[net.dag.edge(a).tail], a) <
             std::make_pair(tidx[net.dag.edge(b).tail], b);
    });
    coeff.assign(net.dag.edge_count(), kZero);
    assigned.assign(net.dag.edge_count(), 0);
  }

  uint8_t avail_span(NodeId v) const {
    uint8_t span = 1;  // (0,0)
    auto fold = [&span](Gf2Vec2 u) {
      uint8_t add = 0;
      for (int c = 0; c < 4; ++c)
        if (span >> c & 1) add |= uint8_t(1 << (c ^ (u.a * 2 + u.b)));
      span |= add;
    };
    if (v == net.s1) fold(kX1);
    if (v == net.s2) fold(kX2);
    for (EdgeId e : net.dag.in_edges(v))
      if (assigned[e]) fold(coeff[e]);
    return span;
  }

  bool dfs(size_t k) {
    if (k == eorder.size()) {
      // All in-edges of each terminal are assigned before this point.
      return (avail_span(net.t1) >> 2 & 1) && (avail_span(net.t2) >> 1 & 1);
    }
    EdgeId e = eorder[k];
    uint8_t span = avail_span(net.dag.edge(e).tail);
    for (int c = 0; c < 4; ++c) {
      if (!(span >> c & 1)) continue;
      if (++explored > config.max_search_space)
        throw OracleTooLarge("explored assignments exceed max_search_space");
      coeff[e] = Gf2Vec2{uint8_t(c >> 1), uint8_t(c & 1)};
      assigned[e] = 1;
      if (dfs(k + 1)) return true;
      assigned[e] = 0;
    }
    coeff[e] = kZero;
    return false;
  }
};

}  // namespace

std::optional<NetworkCode> exhaustive_scalar_codes(const DoubleUnicastNet& net,
                                                   const OracleConfig& config) {
  Searcher s(net, config);
  if (!s.dfs(0)) return std::nullopt;
  return NetworkCode{std::move(s.coeff)};
}

AgreementRecord agreement_check(const DoubleUnicastNet& net,
                                const OracleConfig& config) {
  AgreementRecord rec;
  rec.feasible = feasible_11(net);
  rec.oracle_found = exhaustive_scalar_codes(net, config).has_value();
  rec.agree = rec.feasible == rec.oracle_found;
  return rec;
}

}  // namespace dunet

#include "dunet/instances.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dunet {

namespace {

using Arc = std::pair<NodeId, NodeId>;

DoubleUnicastNet build(NodeId n, const std::vector<Arc>& arcs, NodeId s1,
                       NodeId s2, NodeId t1, NodeId t2) {
  return DoubleUnicastNet::make(Dag(n, arcs), s1, s2, t1, t2);
}

}  // namespace

const std::vector<std::string>& canned_names() {
  static const std::vector<std::string> names = {
      "DISJOINT",  "BOTTLENECK", "CROSSED",  "BUTTERFLY", "GRAIL",
      "HALF_BUTTERFLY_AUG", "GRAIL_I4", "GRAIL_I5", "REDUCTION"};
  return names;
}

DoubleUnicastNet canned(const std::string& name) {
  if (name == "DISJOINT")
    return build(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}}, 0, 1, 4, 5);
  if (name == "BOTTLENECK")
    return build(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}, 0, 1, 4, 5);
  if (name == "CROSSED")
    return build(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {0, 5}}, 0, 1, 4,
                 5);
  if (name == "BUTTERFLY")
    return build(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {0, 5}, {1, 4}},
                 0, 1, 4, 5);
  if (name == "GRAIL")
    return build(8,
                 {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 4}, {3, 6},
                  {5, 6}, {5, 7}},
                 0, 1, 6, 7);
  if (name == "HALF_BUTTERFLY_AUG")
    return build(10,
                 {{0, 2}, {1, 2}, {2, 3}, {3, 6}, {6, 7}, {7, 8}, {7, 9},
                  {0, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 9}},
                 0, 1, 8, 9);
  if (name == "GRAIL_I4")
    return build(12,
                 {{1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                  {7, 8}, {8, 9}, {9, 10}, {9, 11}, {0, 4}, {3, 6}, {5, 8},
                  {7, 10}},
                 0, 1, 10, 11);
  if (name == "GRAIL_I5")
    return build(14,
                 {{1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                  {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12}, {11, 13},
                  {0, 4}, {3, 6}, {5, 8}, {7, 10}, {9, 13}},
                 0, 1, 12, 13);
  if (name == "REDUCTION")
    return build(9,
                 {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                  {6, 8}, {1, 3}, {0, 5}, {4, 7}},
                 0, 1, 7, 8);
  throw UnknownInstance(name);
}

DoubleUnicastNet random_net(const GeneratorParams& params) {
  if (params.min_nodes < 4)
    throw std::invalid_argument("need at least 4 nodes");
  if (params.max_nodes < params.min_nodes ||
      params.max_edges < params.min_edges || params.min_edges < 0)
    throw std::invalid_argument("empty parameter range");
  std::mt19937_64 rng(params.seed);
  // Modulo draw: identical across platforms, unlike the distribution
  // adapters in <random>.
  auto draw = [&rng](uint64_t k) -> uint64_t { return rng() % k; };

  const NodeId n = params.min_nodes +
                   static_cast<NodeId>(draw(params.max_nodes - params.min_nodes + 1));
  const int target =
      params.min_edges +
      static_cast<int>(draw(params.max_edges - params.min_edges + 1));
  const NodeId s1 = 0, s2 = 1, t1 = n - 2, t2 = n - 1;

  std::vector<Arc> arcs;
  std::set<Arc> present;
  auto push = [&](NodeId a, NodeId b) {
    if (present.insert({a, b}).second) arcs.push_back({a, b});
  };

  if (params.ensure_connected) {
    auto embed = [&](NodeId s, NodeId t) {
      std::vector<NodeId> pool;
      for (NodeId v = 2; v <= n - 3; ++v) pool.push_back(v);
      const uint64_t max_mids = std::min<uint64_t>(3, pool.size());
      const uint64_t mids = draw(max_mids + 1);
      std::vector<NodeId> chosen;
      for (uint64_t i = 0; i < mids; ++i) {
        size_t idx = static_cast<size_t>(draw(pool.size()));
        chosen.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
      }
      std::sort(chosen.begin(), chosen.end());
      NodeId cur = s;
      for (NodeId m : chosen) {
        push(cur, m);
        cur = m;
      }
      push(cur, t);
    };
    embed(s1, t1);
    embed(s2, t2);
  }

  std::vector<Arc> pool;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (!present.count({a, b})) pool.push_back({a, b});
  while (static_cast<int>(arcs.size()) < target && !pool.empty()) {
    size_t idx = static_cast<size_t>(draw(pool.size()));
    push(pool[idx].first, pool[idx].second);
    pool.erase(pool.begin() + idx);
  }
  return build(n, arcs, s1, s2, t1, t2);
}

}  // namespace dunet

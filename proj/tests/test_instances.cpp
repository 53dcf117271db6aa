#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dunet/feasibility.hpp"
#include "dunet/instances.hpp"

using namespace dunet;

namespace {

std::vector<std::pair<NodeId, NodeId>> arcs_of(const Dag& d) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (EdgeId e = 0; e < d.edge_count(); ++e)
    out.push_back({d.edge(e).tail, d.edge(e).head});
  return out;
}

bool same_net(const DoubleUnicastNet& a, const DoubleUnicastNet& b) {
  return a.dag.node_count() == b.dag.node_count() &&
         arcs_of(a.dag) == arcs_of(b.dag) && a.s1 == b.s1 && a.s2 == b.s2 &&
         a.t1 == b.t1 && a.t2 == b.t2;
}

}  // namespace

TEST_CASE("catalog lists nine instances") {
  CHECK(canned_names().size() == 9);
  for (const auto& name : canned_names()) {
    auto net = canned(name);
    CHECK(topological_order(net.dag).size() ==
          size_t(net.dag.node_count()));
    CHECK(net.s1 != net.t1);
    CHECK(net.s2 != net.t2);
  }
  CHECK_THROWS_AS(canned("NOPE"), UnknownInstance);
}

TEST_CASE("small instances have the frozen topology") {
  auto dj = canned("DISJOINT");
  CHECK(dj.dag.node_count() == 6);
  CHECK(arcs_of(dj.dag) == std::vector<std::pair<NodeId, NodeId>>{
                               {0, 2}, {2, 4}, {1, 3}, {3, 5}});
  CHECK(dj.s1 == 0);
  CHECK(dj.s2 == 1);
  CHECK(dj.t1 == 4);
  CHECK(dj.t2 == 5);

  auto bn = canned("BOTTLENECK");
  CHECK(arcs_of(bn.dag) == std::vector<std::pair<NodeId, NodeId>>{
                               {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});

  auto cr = canned("CROSSED");
  CHECK(arcs_of(cr.dag) == std::vector<std::pair<NodeId, NodeId>>{
                               {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5},
                               {0, 5}});

  auto bf = canned("BUTTERFLY");
  CHECK(arcs_of(bf.dag) == std::vector<std::pair<NodeId, NodeId>>{
                               {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5},
                               {0, 5}, {1, 4}});

  auto gr = canned("GRAIL");
  CHECK(gr.dag.node_count() == 8);
  CHECK(arcs_of(gr.dag) == std::vector<std::pair<NodeId, NodeId>>{
                               {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                               {0, 4}, {3, 6}, {5, 6}, {5, 7}});
  CHECK(gr.t1 == 6);
  CHECK(gr.t2 == 7);
}

TEST_CASE("larger instances have the frozen sizes") {
  CHECK(canned("HALF_BUTTERFLY_AUG").dag.node_count() == 10);
  CHECK(canned("HALF_BUTTERFLY_AUG").dag.edge_count() == 12);
  CHECK(canned("GRAIL_I4").dag.node_count() == 12);
  CHECK(canned("GRAIL_I4").dag.edge_count() == 15);
  CHECK(canned("GRAIL_I5").dag.node_count() == 14);
  CHECK(canned("GRAIL_I5").dag.edge_count() == 18);
  CHECK(canned("REDUCTION").dag.node_count() == 9);
  CHECK(canned("REDUCTION").dag.edge_count() == 11);
}

TEST_CASE("generation is a pure function of the parameters") {
  GeneratorParams gp;
  gp.seed = 1;
  CHECK(same_net(random_net(gp), random_net(gp)));
  GeneratorParams other = gp;
  other.seed = 2;
  CHECK_FALSE(same_net(random_net(gp), random_net(other)));
}

TEST_CASE("generated nets respect the parameter envelope") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams gp;
    gp.min_nodes = 6;
    gp.max_nodes = 8;
    gp.min_edges = 8;
    gp.max_edges = 14;
    gp.seed = seed;
    auto net = random_net(gp);
    NodeId n = net.dag.node_count();
    CHECK(n >= 6);
    CHECK(n <= 8);
    CHECK(net.dag.edge_count() <= 14);
    CHECK(net.dag.edge_count() > 0);
    CHECK(net.s1 == 0);
    CHECK(net.s2 == 1);
    CHECK(net.t1 == n - 2);
    CHECK(net.t2 == n - 1);
    for (EdgeId e = 0; e < net.dag.edge_count(); ++e)
      CHECK(net.dag.edge(e).tail < net.dag.edge(e).head);  // forward line
    auto pc = pair_connectivity(net);
    CHECK(pc.c11);
    CHECK(pc.c22);
  }
}

TEST_CASE("connectivity embedding can be turned off") {
  int disconnected = 0;
  for (uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorParams gp;
    gp.min_nodes = 6;
    gp.max_nodes = 6;
    gp.min_edges = 5;
    gp.max_edges = 7;
    gp.seed = seed;
    gp.ensure_connected = false;
    auto net = random_net(gp);
    auto pc = pair_connectivity(net);
    if (!pc.c11 || !pc.c22) ++disconnected;
  }
  CHECK(disconnected > 0);
}

TEST_CASE("parameter validation") {
  GeneratorParams gp;
  gp.min_nodes = 3;
  CHECK_THROWS_AS(random_net(gp), std::invalid_argument);
  GeneratorParams rev;
  rev.min_nodes = 8;
  rev.max_nodes = 6;
  CHECK_THROWS_AS(random_net(rev), std::invalid_argument);
}

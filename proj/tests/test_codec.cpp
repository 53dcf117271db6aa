#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dunet/codec.hpp"
#include "dunet/instances.hpp"

using namespace dunet;

namespace {

NetworkCode make_code(EdgeId edge_count,
                      std::vector<std::pair<EdgeId, Gf2Vec2>> entries) {
  NetworkCode c;
  c.coeff.assign(edge_count, kZero);
  for (auto& [e, v] : entries) c.coeff[e] = v;
  return c;
}

const NetworkCode kButterflyCode = make_code(
    7, {{0, kX1}, {1, kX2}, {2, kX1X2}, {3, kX1X2}, {4, kX1X2}, {5, kX1},
        {6, kX2}});

}  // namespace

TEST_CASE("gf2 vector arithmetic") {
  CHECK((kX1 ^ kX2) == kX1X2);
  CHECK((kX1X2 ^ kX1) == kX2);
  CHECK((kX1 ^ kX1) == kZero);
  CHECK(kZero != kX1);
}

TEST_CASE("routing code on independent paths verifies") {
  auto net = canned("DISJOINT");
  auto code = make_code(4, {{0, kX1}, {1, kX1}, {2, kX2}, {3, kX2}});
  auto rep = verify(net, code);
  CHECK(rep.valid);
  CHECK(rep.t1_decodes);
  CHECK(rep.t2_decodes);
  for (char ok : rep.edge_ok) CHECK(ok);
}

TEST_CASE("an edge cannot carry a symbol its tail never saw") {
  auto net = canned("DISJOINT");
  auto code = make_code(4, {{0, kX2}, {1, kX1}, {2, kX2}, {3, kX2}});
  auto rep = verify(net, code);
  CHECK_FALSE(rep.edge_ok[0]);  // s1 only injects x1
  CHECK_FALSE(rep.valid);
}

TEST_CASE("per-terminal decode flags are independent") {
  auto net = canned("DISJOINT");
  auto code = make_code(4, {{0, kX1}, {1, kX1}});
  auto rep = verify(net, code);
  CHECK(rep.t1_decodes);
  CHECK_FALSE(rep.t2_decodes);
  CHECK_FALSE(rep.valid);
  for (char ok : rep.edge_ok) CHECK(ok);  // zero edges are always consistent
}

TEST_CASE("relay code on the crossed instance verifies") {
  auto rep = verify(canned("BUTTERFLY"), kButterflyCode);
  CHECK(rep.valid);
}

TEST_CASE("code size must match the edge count") {
  auto net = canned("DISJOINT");
  CHECK_THROWS_AS(verify(net, make_code(3, {})), DomainMismatch);
  CHECK_THROWS_AS(verify(net, make_code(5, {})), DomainMismatch);
}

TEST_CASE("masked-out edges must stay silent") {
  auto base = canned("BUTTERFLY");
  auto net = DoubleUnicastNet::make(base.dag.without(5), base.s1, base.s2,
                                    base.t1, base.t2);
  auto code = make_code(7, {{5, kX1}});
  auto rep = verify(net, code);
  CHECK_FALSE(rep.edge_ok[5]);
  CHECK_FALSE(rep.valid);
  CHECK(verify(net, make_code(7, {})).edge_ok[5]);
}

TEST_CASE("coincident sources inject both symbols") {
  Dag d(3, {{0, 1}, {0, 2}});
  auto net = DoubleUnicastNet::make(std::move(d), 0, 0, 1, 2);
  auto rep = verify(net, make_code(2, {{0, kX1}, {1, kX2}}));
  CHECK(rep.valid);
  auto rep2 = verify(net, make_code(2, {{0, kX1X2}, {1, kX1}}));
  CHECK(rep2.edge_ok[0]);
  CHECK(rep2.edge_ok[1]);  // locally fine, but t2 cannot decode
  CHECK_FALSE(rep2.t2_decodes);
}

TEST_CASE("simulation traces the relay for all input pairs") {
  auto net = canned("BUTTERFLY");
  for (uint8_t x1 = 0; x1 < 2; ++x1)
    for (uint8_t x2 = 0; x2 < 2; ++x2) {
      auto sim = simulate(net, kButterflyCode, x1, x2);
      CHECK(sim.t1_output == x1);
      CHECK(sim.t2_output == x2);
      CHECK(sim.edge_value[2] == (x1 ^ x2));
      CHECK(sim.edge_value[0] == x1);
      CHECK(sim.edge_value[6] == x2);
    }
}

TEST_CASE("simulation refuses an unverified code") {
  auto net = canned("DISJOINT");
  CHECK_THROWS_AS(simulate(net, make_code(4, {{0, kX2}}), 1, 0), InvalidCode);
}

TEST_CASE("block transmission over the half-half schedule") {
  auto net = canned("BOTTLENECK");
  auto sched = time_share_schedule(net, Rational::make(1, 2),
                                   Rational::make(1, 2));
  auto [b1, b2] = simulate_schedule(net, sched, {1}, {0});
  CHECK(b1 == std::vector<uint8_t>{1});
  CHECK(b2 == std::vector<uint8_t>{0});
}

TEST_CASE("block transmission with uneven rates") {
  auto net = canned("BOTTLENECK");
  auto sched = time_share_schedule(net, Rational::make(1, 3),
                                   Rational::make(1, 2));
  std::vector<uint8_t> x1 = {1, 0}, x2 = {1, 1, 0};
  auto [b1, b2] = simulate_schedule(net, sched, x1, x2);
  CHECK(b1 == x1);
  CHECK(b2 == x2);
}

TEST_CASE("block lengths must match the schedule") {
  auto net = canned("BOTTLENECK");
  auto sched = time_share_schedule(net, Rational::make(1, 2),
                                   Rational::make(1, 2));
  CHECK_THROWS_AS(simulate_schedule(net, sched, {1, 0}, {0}),
                  BlockLengthMismatch);
  CHECK_THROWS_AS(simulate_schedule(net, sched, {1}, {}),
                  BlockLengthMismatch);
}

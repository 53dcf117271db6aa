#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dunet/instances.hpp"
#include "dunet/oracle.hpp"

using namespace dunet;

namespace {

NetworkCode make_code(EdgeId edge_count,
                      std::vector<std::pair<EdgeId, Gf2Vec2>> entries) {
  NetworkCode c;
  c.coeff.assign(edge_count, kZero);
  for (auto& [e, v] : entries) c.coeff[e] = v;
  return c;
}

}  // namespace

TEST_CASE("search finds the routing code on independent paths") {
  auto code = exhaustive_scalar_codes(canned("DISJOINT"));
  REQUIRE(code);
  CHECK(*code ==
        make_code(4, {{0, kX1}, {1, kX1}, {2, kX2}, {3, kX2}}));
}

TEST_CASE("search finds the lexicographically first relay code") {
  auto code = exhaustive_scalar_codes(canned("BUTTERFLY"));
  REQUIRE(code);
  CHECK(*code == make_code(7, {{0, kX1},
                               {1, kX2},
                               {2, kX1X2},
                               {3, kX1X2},
                               {4, kX1X2},
                               {5, kX1},
                               {6, kX2}}));
}

TEST_CASE("no scalar code crosses a blocked bottleneck") {
  CHECK_FALSE(exhaustive_scalar_codes(canned("BOTTLENECK")));
  CHECK_FALSE(exhaustive_scalar_codes(canned("CROSSED")));
}

TEST_CASE("every found code verifies") {
  for (const char* name : {"DISJOINT", "BUTTERFLY", "GRAIL",
                           "HALF_BUTTERFLY_AUG", "GRAIL_I4", "GRAIL_I5",
                           "REDUCTION"}) {
    auto net = canned(name);
    auto code = exhaustive_scalar_codes(net);
    REQUIRE_MESSAGE(code, name);
    CHECK_MESSAGE(verify(net, *code).valid, name);
  }
}

TEST_CASE("search is deterministic") {
  auto a = exhaustive_scalar_codes(canned("GRAIL_I4"));
  auto b = exhaustive_scalar_codes(canned("GRAIL_I4"));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a == *b);
}

TEST_CASE("tight budget aborts mid-search, not with a bogus verdict") {
  OracleConfig tight;
  tight.max_search_space = 3;
  CHECK_THROWS_AS(exhaustive_scalar_codes(canned("BUTTERFLY"), tight),
                  OracleTooLarge);
  // absence may only be claimed after a complete search
  CHECK_THROWS_AS(exhaustive_scalar_codes(canned("BOTTLENECK"), tight),
                  OracleTooLarge);
  CHECK_FALSE(exhaustive_scalar_codes(canned("BOTTLENECK")));
}

TEST_CASE("cut analysis and exhaustion agree on the canned suite") {
  for (const auto& name : canned_names()) {
    auto rec = agreement_check(canned(name));
    CHECK_MESSAGE(rec.agree, name);
  }
}

TEST_CASE("cut analysis and exhaustion agree on a random corpus") {
  int checked = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorParams gp;
    gp.min_nodes = 5;
    gp.max_nodes = 7;
    gp.min_edges = 6;
    gp.max_edges = 11;
    gp.seed = 1000 + seed;
    auto net = random_net(gp);
    auto rec = agreement_check(net);
    CHECK(rec.agree);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("budget overrun propagates through the agreement check") {
  OracleConfig tight;
  tight.max_search_space = 3;
  CHECK_THROWS_AS(agreement_check(canned("BUTTERFLY"), tight),
                  OracleTooLarge);
}

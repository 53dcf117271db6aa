#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "dunet/instances.hpp"
#include "dunet/netio.hpp"

using namespace dunet;

namespace {

const char* kBottleneckFile =
    "# shared relay\n"
    "nodes s1 s2 m n t1 t2\n"
    "edge 0 s1 m\n"
    "edge 1 s2 m\n"
    "edge 2 m n\n"
    "edge 3 n t1\n"
    "edge 4 n t2\n"
    "s1 s1\n"
    "s2 s2\n"
    "t1 t1\n"
    "t2 t2\n";

const char* kGrailFile =
    "nodes s1 s2 a g b c t1 t2\n"
    "edge 0 s1 a\n"
    "edge 1 s2 a\n"
    "edge 2 a g\n"
    "edge 3 g b\n"
    "edge 4 b c\n"
    "edge 5 s1 b\n"
    "edge 6 g t1\n"
    "edge 7 c t1\n"
    "edge 8 c t2\n"
    "s1 s1\ns2 s2\nt1 t1\nt2 t2\n";

}  // namespace

TEST_CASE("network files parse into the expected net") {
  auto nf = parse_network(kBottleneckFile);
  CHECK(nf.node_names ==
        std::vector<std::string>{"s1", "s2", "m", "n", "t1", "t2"});
  CHECK(nf.net.dag.node_count() == 6);
  CHECK(nf.net.dag.edge_count() == 5);
  CHECK(nf.net.s1 == 0);
  CHECK(nf.net.s2 == 1);
  CHECK(nf.net.t1 == 4);
  CHECK(nf.net.t2 == 5);
  CHECK(nf.net.dag.edge(2).tail == 2);
  CHECK(nf.net.dag.edge(2).head == 3);
}

TEST_CASE("edge lines may come in any order and node lines may repeat") {
  auto nf = parse_network(
      "nodes a b\nnodes c d\n"
      "edge 1 b c\nedge 0 a b\nedge 2 c d\n"
      "s1 a\ns2 a\nt1 c\nt2 d\n");
  CHECK(nf.node_names == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(nf.net.dag.edge(0).tail == 0);
  CHECK(nf.net.dag.edge(1).tail == 1);
}

TEST_CASE("export and import round-trip exactly") {
  auto nf = parse_network(kGrailFile);
  auto text = write_network(nf);
  auto nf2 = parse_network(text);
  CHECK(nf2.node_names == nf.node_names);
  CHECK(write_network(nf2) == text);
  CHECK(nf2.net.s1 == nf.net.s1);
  CHECK(nf2.net.dag.edge_count() == nf.net.dag.edge_count());
}

TEST_CASE("parse failures carry a diagnostic") {
  CHECK_THROWS_AS(parse_network(""), ParseError);
  CHECK_THROWS_AS(parse_network("nodes a a\n"), ParseError);
  CHECK_THROWS_AS(
      parse_network("nodes a b\nedge 0 a b\nedge 0 a b\n"
                    "s1 a\ns2 a\nt1 b\nt2 b\n"),
      ParseError);
  CHECK_THROWS_AS(  // edge ids must be dense
      parse_network("nodes a b\nedge 1 a b\ns1 a\ns2 a\nt1 b\nt2 b\n"),
      ParseError);
  CHECK_THROWS_AS(  // missing role
      parse_network("nodes a b\nedge 0 a b\ns1 a\ns2 a\nt1 b\n"),
      ParseError);
  CHECK_THROWS_AS(  // unknown node in edge
      parse_network("nodes a b\nedge 0 a z\ns1 a\ns2 a\nt1 b\nt2 b\n"),
      ParseError);
  CHECK_THROWS_AS(  // unknown keyword
      parse_network("vertices a b\n"), ParseError);
  CHECK_THROWS_AS(  // malformed edge line
      parse_network("nodes a b\nedge 0 a\ns1 a\ns2 a\nt1 b\nt2 b\n"),
      ParseError);
  CHECK_THROWS_AS(  // duplicate role line
      parse_network("nodes a b\nedge 0 a b\ns1 a\ns1 a\ns2 a\nt1 b\nt2 b\n"),
      ParseError);
  // cyclic input surfaces the cycle error
  CHECK_THROWS_AS(
      parse_network("nodes a b\nedge 0 a b\nedge 1 b a\n"
                    "s1 a\ns2 a\nt1 b\nt2 b\n"),
      CycleDetected);
}

TEST_CASE("code files round-trip and validate") {
  auto code = parse_code("0 1 0\n2 1 1\n# note\n\n", 4);
  CHECK(code.coeff[0] == kX1);
  CHECK(code.coeff[1] == kZero);
  CHECK(code.coeff[2] == kX1X2);
  auto text = write_code(code);
  CHECK(text == "0 1 0\n2 1 1\n");
  CHECK(parse_code(text, 4) == code);
  CHECK_THROWS_AS(parse_code("9 1 0\n", 4), ParseError);
  CHECK_THROWS_AS(parse_code("0 2 0\n", 4), ParseError);
  CHECK_THROWS_AS(parse_code("0 1\n", 4), ParseError);
}

TEST_CASE("label names") {
  CHECK(label_name(kX1) == "x1");
  CHECK(label_name(kX2) == "x2");
  CHECK(label_name(kX1X2) == "x1+x2");
  CHECK(label_name(kZero) == "-");
}

TEST_CASE("dot export shapes roles and labels edges") {
  auto nf = parse_network(kBottleneckFile);
  auto plain = to_dot(nf);
  CHECK(plain.find("digraph") != std::string::npos);
  CHECK(plain.find("\"s1\" [shape=box];") != std::string::npos);
  CHECK(plain.find("\"t2\" [shape=doubleoctagon];") != std::string::npos);
  CHECK(plain.find("\"m\" -> \"n\";") != std::string::npos);
  CHECK(plain.find("label=") == std::string::npos);

  NetworkCode code;
  code.coeff = {kX1, kZero, kX1X2, kX1, kZero};
  auto labeled = to_dot(nf, &code);
  CHECK(labeled.find("\"m\" -> \"n\" [label=\"x1+x2\"];") !=
        std::string::npos);
  CHECK(labeled.find("\"s2\" -> \"m\" [label=\"-\",style=dashed];") !=
        std::string::npos);
}

TEST_CASE("analysis report is frozen") {
  auto nf = parse_network(kBottleneckFile);
  CHECK(check_report(nf) ==
        "pair (s1,t1): connected\n"
        "pair (s2,t2): connected\n"
        "pair (s1,t2): connected\n"
        "pair (s2,t1): connected\n"
        "candidate edge 2 (m->n): cuts11=1 cuts22=1 cuts12=1 cuts21=1 "
        "blocking=1\n"
        "blocking edges: 1\n"
        "region: sum-rate-one\n"
        "symmetric capacity: 1/2\n"
        "verdict: infeasible\n");
}

TEST_CASE("synthesis report is frozen") {
  auto nf = parse_network(kGrailFile);
  auto res = synthesize(nf.net);
  CHECK(synthesis_report(nf, res) ==
        "case: IIB(i)\n"
        "reroutes: 0\n"
        "n1: a\n"
        "nk: c\n"
        "chain length: 2\n"
        "chain terminal: t1\n"
        "labels: x1+x2 x2\n"
        "fallback: none\n"
        "code:\n"
        "edge 0 (s1->a): x1\n"
        "edge 1 (s2->a): x2\n"
        "edge 2 (a->g): x1+x2\n"
        "edge 3 (g->b): x1+x2\n"
        "edge 4 (b->c): x2\n"
        "edge 5 (s1->b): x1\n"
        "edge 6 (g->t1): x1+x2\n"
        "edge 7 (c->t1): x2\n"
        "edge 8 (c->t2): x2\n"
        "verified: ok\n");
}

TEST_CASE("verify report lists offending edges") {
  auto nf = parse_network(kBottleneckFile);
  NetworkCode bad;
  bad.coeff = {kX2, kZero, kX1, kX1, kZero};  // s1 cannot emit x2
  auto rep = verify(nf.net, bad);
  CHECK(verify_report(nf, rep) ==
        "edges: 5\n"
        "bad edge 0 (s1->m)\n"
        "bad edge 2 (m->n)\n"
        "t1 decodes: yes\n"
        "t2 decodes: no\n"
        "valid: no\n");
}

TEST_CASE("region report answers membership and emits the schedule") {
  auto nf = parse_network(kBottleneckFile);
  CHECK(region_report(nf, Rational::make(1, 2), Rational::make(1, 2)) ==
        "rates: r1=1/2 r2=1/2\n"
        "region: sum-rate-one\n"
        "membership: inside\n"
        "schedule slots: 2\n"
        "slot 0: session 1 edges 0,2,3\n"
        "slot 1: session 2 edges 1,2,4\n");
  CHECK(region_report(nf, Rational::make(2, 3), Rational::make(2, 3)) ==
        "rates: r1=2/3 r2=2/3\n"
        "region: sum-rate-one\n"
        "membership: outside\n");
}

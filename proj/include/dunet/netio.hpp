#pragma once
// Text formats and reports. A network file is line oriented:
//
//   # comment
//   nodes s1 s2 a b t1 t2
//   edge 0 s1 a
//   edge 1 s2 a
//   s1 s1
//   s2 s2
//   t1 t1
//   t2 t2
//
// Node ids follow declaration order in the nodes line; edge ids must be
// dense from 0 (any order in the file). A code file holds one line per
// nonzero edge: "<edge-id> <a> <b>"; absent edges carry (0,0).

#include <iosfwd>
#include <string>
#include <vector>

#include "dunet/codec.hpp"
#include "dunet/feasibility.hpp"
#include "dunet/graph.hpp"
#include "dunet/synthesis.hpp"

namespace dunet {

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError: " + m) {}
};

struct NetworkFile {
  std::vector<std::string> node_names;  // index = NodeId
  DoubleUnicastNet net;
};

NetworkFile parse_network(const std::string& text);
std::string write_network(const NetworkFile& nf);

NetworkCode parse_code(const std::string& text, EdgeId edge_count);
std::string write_code(const NetworkCode& code);

std::string label_name(Gf2Vec2 v);  // "x1", "x2", "x1+x2", "-"

// Graphviz rendering; pass a code to label edges with their symbols.
std::string to_dot(const NetworkFile& nf, const NetworkCode* code = nullptr);

// Stable report bodies shared by the command-line tool and tests.
std::string check_report(const NetworkFile& nf);
std::string synthesis_report(const NetworkFile& nf, const SynthesisResult& res);
std::string verify_report(const NetworkFile& nf, const VerifyReport& rep);
std::string region_report(const NetworkFile& nf, Rational r1, Rational r2);

}  // namespace dunet

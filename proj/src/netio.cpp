#include "dunet/netio.hpp"

#include <map>
#include <sstream>

namespace dunet {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::string rational_str(Rational r) {
  std::ostringstream out;
  if (r.den == 1)
    out << r.num;
  else
    out << r.num << "/" << r.den;
  return out.str();
}

}  // namespace

NetworkFile parse_network(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  std::map<std::string, NodeId> by_name;
  std::map<EdgeId, std::pair<std::string, std::string>> edges;
  std::map<std::string, std::string> roles;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    auto where = [lineno] {
      return std::string(" (line ") + std::to_string(lineno) + ")";
    };
    if (key == "nodes") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (by_name.count(toks[i]))
          throw ParseError("duplicate node name '" + toks[i] + "'" + where());
        by_name[toks[i]] = static_cast<NodeId>(names.size());
        names.push_back(toks[i]);
      }
    } else if (key == "edge") {
      if (toks.size() != 4)
        throw ParseError("edge line needs id, tail, head" + where());
      EdgeId id;
      try {
        id = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw ParseError("bad edge id '" + toks[1] + "'" + where());
      }
      if (edges.count(id))
        throw ParseError("duplicate edge id " + toks[1] + where());
      edges[id] = {toks[2], toks[3]};
    } else if (key == "s1" || key == "s2" || key == "t1" || key == "t2") {
      if (toks.size() != 2)
        throw ParseError(key + " line needs one node name" + where());
      if (roles.count(key))
        throw ParseError("duplicate " + key + " line" + where());
      roles[key] = toks[1];
    } else {
      throw ParseError("unknown keyword '" + key + "'" + where());
    }
  }
  if (names.empty()) throw ParseError("no nodes declared");
  for (const char* r : {"s1", "s2", "t1", "t2"})
    if (!roles.count(r))
      throw ParseError(std::string("missing ") + r + " line");
  auto lookup = [&](const std::string& name) {
    auto it = by_name.find(name);
    if (it == by_name.end())
      throw ParseError("unknown node name '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<NodeId, NodeId>> arcs(edges.size());
  for (const auto& [id, ends] : edges) {
    if (id < 0 || id >= static_cast<EdgeId>(edges.size()))
      throw ParseError("edge ids must be dense from 0; found " +
                       std::to_string(id));
    arcs[id] = {lookup(ends.first), lookup(ends.second)};
  }
  Dag dag(static_cast<NodeId>(names.size()), arcs);
  topological_order(dag);  // rejects cyclic input early
  auto net = DoubleUnicastNet::make(std::move(dag), lookup(roles["s1"]),
                                    lookup(roles["s2"]), lookup(roles["t1"]),
                                    lookup(roles["t2"]));
  return NetworkFile{std::move(names), std::move(net)};
}

std::string write_network(const NetworkFile& nf) {
  std::ostringstream out;
  out << "nodes";
  for (const auto& n : nf.node_names) out << " " << n;
  out << "\n";
  const Dag& d = nf.net.dag;
  for (EdgeId e = 0; e < d.edge_count(); ++e)
    out << "edge " << e << " " << nf.node_names[d.edge(e).tail] << " "
        << nf.node_names[d.edge(e).head] << "\n";
  out << "s1 " << nf.node_names[nf.net.s1] << "\n";
  out << "s2 " << nf.node_names[nf.net.s2] << "\n";
  out << "t1 " << nf.node_names[nf.net.t1] << "\n";
  out << "t2 " << nf.node_names[nf.net.t2] << "\n";
  return out.str();
}

NetworkCode parse_code(const std::string& text, EdgeId edge_count) {
  NetworkCode code;
  code.coeff.assign(edge_count, kZero);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw ParseError("code line needs edge id and two bits (line " +
                       std::to_string(lineno) + ")");
    int id, a, b;
    try {
      id = std::stoi(toks[0]);
      a = std::stoi(toks[1]);
      b = std::stoi(toks[2]);
    } catch (const std::exception&) {
      throw ParseError("bad code line (line " + std::to_string(lineno) + ")");
    }
    if (id < 0 || id >= edge_count)
      throw ParseError("edge id " + toks[0] + " out of range (line " +
                       std::to_string(lineno) + ")");
    if ((a | b) > 1 || a < 0 || b < 0)
      throw ParseError("coefficients must be 0 or 1 (line " +
                       std::to_string(lineno) + ")");
    code.coeff[id] = Gf2Vec2{uint8_t(a), uint8_t(b)};
  }
  return code;
}

std::string write_code(const NetworkCode& code) {
  std::ostringstream out;
  for (size_t e = 0; e < code.coeff.size(); ++e)
    if (code.coeff[e] != kZero)
      out << e << " " << int(code.coeff[e].a) << " " << int(code.coeff[e].b)
          << "\n";
  return out.str();
}

std::string label_name(Gf2Vec2 v) {
  if (v == kX1) return "x1";
  if (v == kX2) return "x2";
  if (v == kX1X2) return "x1+x2";
  return "-";
}

std::string to_dot(const NetworkFile& nf, const NetworkCode* code) {
  const auto& net = nf.net;
  std::ostringstream out;
  out << "digraph dunet {\n  rankdir=LR;\n";
  for (NodeId v = 0; v < net.dag.node_count(); ++v) {
    out << "  \"" << nf.node_names[v] << "\"";
    if (v == net.s1 || v == net.s2)
      out << " [shape=box]";
    else if (v == net.t1 || v == net.t2)
      out << " [shape=doubleoctagon]";
    out << ";\n";
  }
  for (EdgeId e = 0; e < net.dag.edge_count(); ++e) {
    const Edge& ed = net.dag.edge(e);
    out << "  \"" << nf.node_names[ed.tail] << "\" -> \""
        << nf.node_names[ed.head] << "\"";
    if (code) {
      out << " [label=\"" << label_name(code->coeff[e]) << "\"";
      if (code->coeff[e] == kZero) out << ",style=dashed";
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string edge_desc(const NetworkFile& nf, EdgeId e) {
  const Edge& ed = nf.net.dag.edge(e);
  std::ostringstream out;
  out << "edge " << e << " (" << nf.node_names[ed.tail] << "->"
      << nf.node_names[ed.head] << ")";
  return out.str();
}

std::string region_line(const RateRegion& region) {
  switch (region.kind) {
    case RateRegion::Kind::Degenerate: {
      std::ostringstream out;
      out << "degenerate max_r1=" << region.max_r1
          << " max_r2=" << region.max_r2;
      return out.str();
    }
    case RateRegion::Kind::SumRateOne:
      return "sum-rate-one";
    case RateRegion::Kind::ContainsUnitPair:
      return "contains-unit-pair";
  }
  return "?";
}

std::string symmetric_str(SymmetricCapacity c) {
  switch (c) {
    case SymmetricCapacity::Zero:
      return "0";
    case SymmetricCapacity::Half:
      return "1/2";
    case SymmetricCapacity::AtLeastOne:
      return ">=1";
  }
  return "?";
}

}  // namespace

std::string check_report(const NetworkFile& nf) {
  const auto& net = nf.net;
  std::ostringstream out;
  auto pc = pair_connectivity(net);
  auto pair_line = [&](const char* label, bool c) {
    out << "pair " << label << ": " << (c ? "connected" : "disconnected")
        << "\n";
  };
  pair_line("(s1,t1)", pc.c11);
  pair_line("(s2,t2)", pc.c22);
  pair_line("(s1,t2)", pc.c12);
  pair_line("(s2,t1)", pc.c21);
  auto region = capacity_region(net);
  if (pc.c11 && pc.c22) {
    int blocking = 0;
    for (const auto& r : blocking_edges(net)) {
      out << "candidate " << edge_desc(nf, r.edge) << ": cuts11="
          << r.disconnects_11 << " cuts22=" << r.disconnects_22
          << " cuts12=" << r.disconnects_12 << " cuts21=" << r.disconnects_21
          << " blocking=" << r.blocking << "\n";
      blocking += r.blocking ? 1 : 0;
    }
    out << "blocking edges: " << blocking << "\n";
  }
  out << "region: " << region_line(region) << "\n";
  out << "symmetric capacity: " << symmetric_str(symmetric_capacity(net))
      << "\n";
  const char* verdict =
      region.kind == RateRegion::Kind::Degenerate
          ? "degenerate"
          : (region.kind == RateRegion::Kind::ContainsUnitPair ? "feasible"
                                                               : "infeasible");
  out << "verdict: " << verdict << "\n";
  return out.str();
}

std::string synthesis_report(const NetworkFile& nf,
                             const SynthesisResult& res) {
  const auto& net = nf.net;
  std::ostringstream out;
  out << "case: " << to_string(res.case_tag) << "\n";
  if (res.routing) {
    auto edge_list = [](const Path& p) {
      std::ostringstream s;
      for (size_t i = 0; i < p.edges.size(); ++i)
        s << (i ? "," : "") << p.edges[i];
      return s.str();
    };
    out << "routing session 1: edges " << edge_list(res.routing->first)
        << "\n";
    out << "routing session 2: edges " << edge_list(res.routing->second)
        << "\n";
  }
  if (res.stem) {
    out << "reroutes: " << res.stem->reroutes << "\n";
    out << "n1: " << nf.node_names[res.stem->n1] << "\n";
    out << "nk: " << nf.node_names[res.stem->nk] << "\n";
  }
  if (res.chain) {
    out << "chain length: " << res.chain->length() << "\n";
    out << "chain terminal: "
        << (res.chain->terminal == net.t1 ? "t1" : "t2") << "\n";
  }
  if (!res.labels.empty()) {
    out << "labels:";
    for (const auto& s : res.labels) out << " " << label_name(s);
    out << "\n";
  }
  if (!res.removed_edges.empty()) {
    out << "removed edges:";
    for (EdgeId e : res.removed_edges) out << " " << e;
    out << "\n";
  }
  out << "fallback: "
      << (res.used_fallback ? "oracle (" + res.fallback_reason + ")" : "none")
      << "\n";
  out << "code:\n";
  for (EdgeId e = 0; e < net.dag.edge_count(); ++e)
    out << edge_desc(nf, e) << ": " << label_name(res.code.coeff[e]) << "\n";
  out << "verified: ok\n";
  return out.str();
}

std::string verify_report(const NetworkFile& nf, const VerifyReport& rep) {
  std::ostringstream out;
  out << "edges: " << rep.edge_ok.size() << "\n";
  for (size_t e = 0; e < rep.edge_ok.size(); ++e)
    if (!rep.edge_ok[e])
      out << "bad " << edge_desc(nf, static_cast<EdgeId>(e)) << "\n";
  out << "t1 decodes: " << (rep.t1_decodes ? "yes" : "no") << "\n";
  out << "t2 decodes: " << (rep.t2_decodes ? "yes" : "no") << "\n";
  out << "valid: " << (rep.valid ? "yes" : "no") << "\n";
  return out.str();
}

std::string region_report(const NetworkFile& nf, Rational r1, Rational r2) {
  const auto& net = nf.net;
  std::ostringstream out;
  out << "rates: r1=" << rational_str(r1) << " r2=" << rational_str(r2)
      << "\n";
  auto region = capacity_region(net);
  out << "region: " << region_line(region) << "\n";
  auto leq_int = [](Rational r, int64_t bound) {
    return r.num <= bound * r.den;
  };
  bool inside = false;
  switch (region.kind) {
    case RateRegion::Kind::Degenerate:
      inside = leq_int(r1, region.max_r1) && leq_int(r2, region.max_r2);
      break;
    case RateRegion::Kind::SumRateOne:
      inside = r1.num * r2.den + r2.num * r1.den <= r1.den * r2.den;
      break;
    case RateRegion::Kind::ContainsUnitPair:
      inside = leq_int(r1, 1) && leq_int(r2, 1);
      break;
  }
  out << "membership: " << (inside ? "inside" : "outside") << "\n";
  if (!inside) return out.str();
  auto pc = pair_connectivity(net);
  bool sum_ok = r1.num * r2.den + r2.num * r1.den <= r1.den * r2.den;
  if (pc.c11 && pc.c22 && sum_ok) {
    auto sched = time_share_schedule(net, r1, r2);
    out << "schedule slots: " << sched.block_length << "\n";
    for (size_t i = 0; i < sched.slots.size(); ++i) {
      const auto& slot = sched.slots[i];
      out << "slot " << i << ": ";
      if (slot.session == 0) {
        out << "idle\n";
        continue;
      }
      out << "session " << slot.session << " edges ";
      for (size_t j = 0; j < slot.route.edges.size(); ++j)
        out << (j ? "," : "") << slot.route.edges[j];
      out << "\n";
    }
  } else if (pc.c11 && pc.c22) {
    out << "schedule: requires coding (run synthesize)\n";
  } else {
    out << "schedule: not applicable\n";
  }
  return out.str();
}

}  // namespace dunet

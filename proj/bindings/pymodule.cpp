// Python bindings over the main library operations: instance construction,
// feasibility analysis, synthesis, verification, simulation, exhaustive
// search, and the text file format.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dunet/instances.hpp"
#include "dunet/netio.hpp"
#include "dunet/oracle.hpp"
#include "dunet/synthesis.hpp"

namespace py = pybind11;
using namespace dunet;

namespace {

py::list code_list(const NetworkCode& code) {
  py::list out;
  for (auto v : code.coeff) out.append(py::make_tuple(int(v.a), int(v.b)));
  return out;
}

NetworkCode code_from_list(const std::vector<std::pair<int, int>>& coeff) {
  NetworkCode code;
  for (auto [a, b] : coeff)
    code.coeff.push_back(Gf2Vec2{uint8_t(a & 1), uint8_t(b & 1)});
  return code;
}

}  // namespace

PYBIND11_MODULE(pydunet, m) {
  m.doc() = "double-unicast scalar network coding";

  py::class_<DoubleUnicastNet>(m, "Net")
      .def_readonly("s1", &DoubleUnicastNet::s1)
      .def_readonly("s2", &DoubleUnicastNet::s2)
      .def_readonly("t1", &DoubleUnicastNet::t1)
      .def_readonly("t2", &DoubleUnicastNet::t2)
      .def("node_count",
           [](const DoubleUnicastNet& n) { return n.dag.node_count(); })
      .def("edge_count",
           [](const DoubleUnicastNet& n) { return n.dag.edge_count(); })
      .def("edges", [](const DoubleUnicastNet& n) {
        std::vector<std::pair<NodeId, NodeId>> out;
        for (EdgeId e = 0; e < n.dag.edge_count(); ++e)
          out.push_back({n.dag.edge(e).tail, n.dag.edge(e).head});
        return out;
      });

  py::class_<NetworkFile>(m, "NetworkFile")
      .def_readonly("node_names", &NetworkFile::node_names)
      .def_readonly("net", &NetworkFile::net);

  m.def("make_net",
        [](NodeId nodes, const std::vector<std::pair<NodeId, NodeId>>& arcs,
           NodeId s1, NodeId s2, NodeId t1, NodeId t2) {
          return DoubleUnicastNet::make(Dag(nodes, arcs), s1, s2, t1, t2);
        },
        py::arg("nodes"), py::arg("arcs"), py::arg("s1"), py::arg("s2"),
        py::arg("t1"), py::arg("t2"));

  m.def("canned", &canned, py::arg("name"));
  m.def("canned_names", [] { return canned_names(); });

  m.def("random_net",
        [](int min_nodes, int max_nodes, int min_edges, int max_edges,
           uint64_t seed, bool ensure_connected) {
          GeneratorParams gp;
          gp.min_nodes = min_nodes;
          gp.max_nodes = max_nodes;
          gp.min_edges = min_edges;
          gp.max_edges = max_edges;
          gp.seed = seed;
          gp.ensure_connected = ensure_connected;
          return random_net(gp);
        },
        py::arg("min_nodes") = 6, py::arg("max_nodes") = 8,
        py::arg("min_edges") = 8, py::arg("max_edges") = 14,
        py::arg("seed") = 0, py::arg("ensure_connected") = true);

  m.def("pair_connectivity", [](const DoubleUnicastNet& net) {
    auto pc = pair_connectivity(net);
    return py::make_tuple(pc.c11, pc.c22, pc.c12, pc.c21);
  });

  m.def("blocking_edges", [](const DoubleUnicastNet& net) {
    py::list out;
    for (const auto& r : blocking_edges(net)) {
      py::dict d;
      d["edge"] = r.edge;
      d["cuts11"] = r.disconnects_11;
      d["cuts22"] = r.disconnects_22;
      d["cuts12"] = r.disconnects_12;
      d["cuts21"] = r.disconnects_21;
      d["blocking"] = r.blocking;
      out.append(d);
    }
    return out;
  });

  m.def("feasible", &feasible_11);

  m.def("capacity_region", [](const DoubleUnicastNet& net) {
    switch (capacity_region(net).kind) {
      case RateRegion::Kind::Degenerate:
        return "degenerate";
      case RateRegion::Kind::SumRateOne:
        return "sum-rate-one";
      default:
        return "contains-unit-pair";
    }
  });

  m.def("symmetric_capacity", [](const DoubleUnicastNet& net) {
    switch (symmetric_capacity(net)) {
      case SymmetricCapacity::Zero:
        return "0";
      case SymmetricCapacity::Half:
        return "1/2";
      default:
        return ">=1";
    }
  });

  m.def("synthesize",
        [](const DoubleUnicastNet& net, uint64_t max_oracle) {
          OracleConfig cfg;
          cfg.max_search_space = max_oracle;
          auto res = synthesize(net, cfg);
          py::dict d;
          d["code"] = code_list(res.code);
          d["case"] = to_string(res.case_tag);
          d["fallback"] = res.used_fallback;
          d["fallback_reason"] = res.fallback_reason;
          d["removed_edges"] = res.removed_edges;
          py::list labels;
          for (auto s : res.labels) labels.append(label_name(s));
          d["labels"] = labels;
          d["chain_length"] =
              res.chain ? py::cast(res.chain->length()) : py::object(py::none());
          d["reroutes"] =
              res.stem ? py::cast(res.stem->reroutes) : py::object(py::none());
          return d;
        },
        py::arg("net"),
        py::arg("max_oracle") = OracleConfig{}.max_search_space);

  m.def("verify",
        [](const DoubleUnicastNet& net,
           const std::vector<std::pair<int, int>>& coeff) {
          auto rep = verify(net, code_from_list(coeff));
          py::dict d;
          d["valid"] = rep.valid;
          d["t1_decodes"] = rep.t1_decodes;
          d["t2_decodes"] = rep.t2_decodes;
          std::vector<EdgeId> bad;
          for (size_t e = 0; e < rep.edge_ok.size(); ++e)
            if (!rep.edge_ok[e]) bad.push_back(EdgeId(e));
          d["bad_edges"] = bad;
          return d;
        });

  m.def("simulate",
        [](const DoubleUnicastNet& net,
           const std::vector<std::pair<int, int>>& coeff, int x1, int x2) {
          auto sim =
              simulate(net, code_from_list(coeff), uint8_t(x1), uint8_t(x2));
          return py::make_tuple(int(sim.t1_output), int(sim.t2_output));
        });

  m.def("oracle",
        [](const DoubleUnicastNet& net, uint64_t max_oracle) -> py::object {
          OracleConfig cfg;
          cfg.max_search_space = max_oracle;
          auto code = exhaustive_scalar_codes(net, cfg);
          if (!code) return py::none();
          return code_list(*code);
        },
        py::arg("net"),
        py::arg("max_oracle") = OracleConfig{}.max_search_space);

  m.def("agreement_check", [](const DoubleUnicastNet& net) {
    auto rec = agreement_check(net);
    return py::make_tuple(rec.feasible, rec.oracle_found, rec.agree);
  });

  m.def("parse_network", &parse_network, py::arg("text"));
  m.def("write_network", &write_network, py::arg("network_file"));
  m.def("check_report", &check_report, py::arg("network_file"));
}

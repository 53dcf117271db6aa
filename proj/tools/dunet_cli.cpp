// Command-line front end over the dunet library: feasibility analysis,
// code synthesis, verification, simulation, exhaustive search, instance
// generation, and rate-region queries on line-oriented network files.
//
// Exit codes: 0 success / positive verdict, 2 negative verdict
// (infeasible, invalid code, outside region, no code exists), 1 error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dunet/instances.hpp"
#include "dunet/netio.hpp"
#include "dunet/oracle.hpp"
#include "dunet/synthesis.hpp"

namespace {

using namespace dunet;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NetworkFile load_net(const std::string& path) {
  return parse_network(slurp(path));
}

// "p/q" or a bare integer
Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational::make(std::stoll(text), 1);
    return Rational::make(std::stoll(text.substr(0, slash)),
                          std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("bad rational '" + text + "'");
  }
}

// "min:max" or a single count
std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)),
            std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error("bad range '" + text + "'");
  }
}

int cmd_check(const std::string& file) {
  auto nf = load_net(file);
  std::cout << check_report(nf);
  return capacity_region(nf.net).kind == RateRegion::Kind::ContainsUnitPair
             ? 0
             : 2;
}

int cmd_synthesize(const std::string& file, const std::string& emit,
                   uint64_t max_oracle) {
  auto nf = load_net(file);
  OracleConfig cfg;
  cfg.max_search_space = max_oracle;
  SynthesisResult res;
  try {
    res = synthesize(nf.net, cfg);
  } catch (const Infeasible& e) {
    std::cout << "verdict: infeasible\n";
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const PairDisconnected& e) {
    std::cout << "verdict: degenerate\n";
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (emit == "dot")
    std::cout << to_dot(nf, &res.code);
  else
    std::cout << synthesis_report(nf, res);
  return 0;
}

int cmd_verify(const std::string& file, const std::string& codefile) {
  auto nf = load_net(file);
  auto code = parse_code(slurp(codefile), nf.net.dag.edge_count());
  auto rep = verify(nf.net, code);
  std::cout << verify_report(nf, rep);
  return rep.valid ? 0 : 2;
}

int cmd_simulate(const std::string& file, const std::string& codefile, int x1,
                 int x2) {
  auto nf = load_net(file);
  auto code = parse_code(slurp(codefile), nf.net.dag.edge_count());
  SimulationResult sim;
  try {
    sim = simulate(nf.net, code, uint8_t(x1), uint8_t(x2));
  } catch (const InvalidCode& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  for (EdgeId e = 0; e < nf.net.dag.edge_count(); ++e)
    std::cout << "edge " << e << " (" << nf.node_names[nf.net.dag.edge(e).tail]
              << "->" << nf.node_names[nf.net.dag.edge(e).head]
              << "): " << int(sim.edge_value[e]) << "\n";
  std::cout << "decoded (" << int(sim.t1_output) << "," << int(sim.t2_output)
            << ")\n";
  return 0;
}

int cmd_oracle(const std::string& file, uint64_t max_oracle) {
  auto nf = load_net(file);
  OracleConfig cfg;
  cfg.max_search_space = max_oracle;
  auto code = exhaustive_scalar_codes(nf.net, cfg);
  if (!code) {
    std::cout << "no scalar code exists\n";
    return 2;
  }
  std::cout << "scalar code found\n";
  for (EdgeId e = 0; e < nf.net.dag.edge_count(); ++e)
    std::cout << "edge " << e << " (" << nf.node_names[nf.net.dag.edge(e).tail]
              << "->" << nf.node_names[nf.net.dag.edge(e).head]
              << "): " << label_name(code->coeff[e]) << "\n";
  return 0;
}

int cmd_gen(uint64_t seed, const std::string& nodes, const std::string& edges,
            bool allow_disconnected) {
  GeneratorParams gp;
  std::tie(gp.min_nodes, gp.max_nodes) = parse_range(nodes);
  std::tie(gp.min_edges, gp.max_edges) = parse_range(edges);
  gp.seed = seed;
  gp.ensure_connected = !allow_disconnected;
  auto net = random_net(gp);
  NetworkFile nf;
  for (NodeId v = 0; v < net.dag.node_count(); ++v)
    nf.node_names.push_back("v" + std::to_string(v));
  nf.net = std::move(net);
  std::cout << write_network(nf);
  return 0;
}

int cmd_region(const std::string& file, const std::string& r1s,
               const std::string& r2s) {
  auto nf = load_net(file);
  auto r1 = parse_rational(r1s);
  auto r2 = parse_rational(r2s);
  auto report = region_report(nf, r1, r2);
  std::cout << report;
  return report.find("membership: inside") != std::string::npos ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double-unicast network code analyzer"};
  app.require_subcommand(1);

  std::string file, codefile, emit = "report";
  std::string nodes = "6:8", edges = "8:14";
  std::string r1s, r2s;
  uint64_t seed = 0;
  uint64_t max_oracle = OracleConfig{}.max_search_space;
  int x1 = 0, x2 = 0;
  bool allow_disconnected = false;

  auto* check = app.add_subcommand("check", "feasibility and region analysis");
  check->add_option("file", file)->required();

  auto* synth = app.add_subcommand("synthesize", "construct a scalar code");
  synth->add_option("file", file)->required();
  synth->add_option("--emit", emit)->check(CLI::IsMember({"report", "dot"}));
  synth->add_option("--max-oracle", max_oracle);

  auto* verify = app.add_subcommand("verify", "validate a code file");
  verify->add_option("file", file)->required();
  verify->add_option("codefile", codefile)->required();

  auto* simulate = app.add_subcommand("simulate", "trace one symbol pair");
  simulate->add_option("file", file)->required();
  simulate->add_option("codefile", codefile)->required();
  simulate->add_option("x1", x1)->required()->check(CLI::Range(0, 1));
  simulate->add_option("x2", x2)->required()->check(CLI::Range(0, 1));

  auto* oracle = app.add_subcommand("oracle", "exhaustive scalar code search");
  oracle->add_option("file", file)->required();
  oracle->add_option("--max-oracle", max_oracle);

  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("--seed", seed);
  gen->add_option("--nodes", nodes, "node count or min:max");
  gen->add_option("--edges", edges, "edge count or min:max");
  gen->add_flag("--allow-disconnected", allow_disconnected);

  auto* region = app.add_subcommand("region", "rate-pair membership query");
  region->add_option("file", file)->required();
  region->add_option("r1", r1s)->required();
  region->add_option("r2", r2s)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(file);
    if (*synth) return cmd_synthesize(file, emit, max_oracle);
    if (*verify) return cmd_verify(file, codefile);
    if (*simulate) return cmd_simulate(file, codefile, x1, x2);
    if (*oracle) return cmd_oracle(file, max_oracle);
    if (*gen) return cmd_gen(seed, nodes, edges, allow_disconnected);
    if (*region) return cmd_region(file, r1s, r2s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

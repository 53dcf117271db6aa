#pragma once
// Canned reference networks covering every dispatch case, and a seeded
// random generator for corpus runs. Generation is a pure function of the
// parameters: identical params give identical nets on every platform.

#include <cstdint>
#include <string>
#include <vector>

#include "dunet/graph.hpp"

namespace dunet {

struct UnknownInstance : Error {
  explicit UnknownInstance(const std::string& m)
      : Error("UnknownInstance: " + m) {}
};

// DISJOINT            two independent session paths (routing)
// BOTTLENECK          one shared edge cuts everything: infeasible
// CROSSED             bottleneck plus one cross edge: still infeasible
// BUTTERFLY           shared stem with both cross edges: XOR relay
// GRAIL               one-hop handle chain ending at t1
// HALF_BUTTERFLY_AUG  one-hop chain ending at t2, handles sharing edges
// GRAIL_I4            four-hop chain ending at t1
// GRAIL_I5            five-hop chain ending at t2
// REDUCTION           first stem edge cuts neither session: edge removal
DoubleUnicastNet canned(const std::string& name);

const std::vector<std::string>& canned_names();

struct GeneratorParams {
  int min_nodes = 6;
  int max_nodes = 8;
  int min_edges = 8;
  int max_edges = 14;
  uint64_t seed = 0;
  bool ensure_connected = true;  // embed witness paths for both sessions
};

// Nodes lie on a topological line: s1=0, s2=1, t1=n-2, t2=n-1, all edges
// forward. Witness paths (when requested) are laid down first, then
// distinct forward edges fill up to the drawn edge count.
DoubleUnicastNet random_net(const GeneratorParams& params);

}  // namespace dunet

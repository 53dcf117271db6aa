#pragma once
// Constructive synthesis of unit-rate scalar codes. Case dispatch:
//   I       two edge-disjoint session paths: plain routing
//   IIA     some edge cuts both sessions but neither cross pair: XOR the
//           sessions through the shared stem, deliver side paths across
//   IIB(i)  first stem edge cuts only session 2: hop-chain of handles along
//           the stem, three-label segment coloring
//   IIB(ii) first stem edge cuts only session 1: the same chain mirrored,
//           grown from s2
//   IIB(iii)first stem edge cuts neither: remove one provably idle edge and
//           re-dispatch; terminates because the edge count drops
// Every synthesized code is re-verified; on any internal failure the
// exhaustive oracle supplies the code and the result records the event.

#include <optional>
#include <string>
#include <vector>

#include "dunet/codec.hpp"
#include "dunet/graph.hpp"
#include "dunet/oracle.hpp"

namespace dunet {

struct CaseMismatch : Error {
  explicit CaseMismatch(const std::string& m) : Error("CaseMismatch: " + m) {}
};
struct PlanInfeasible : Error {
  explicit PlanInfeasible(const std::string& m)
      : Error("PlanInfeasible: " + m) {}
};
struct ChainStuck : Error {
  explicit ChainStuck(const std::string& m) : Error("ChainStuck: " + m) {}
};
struct ReductionStuck : Error {
  explicit ReductionStuck(const std::string& m)
      : Error("ReductionStuck: " + m) {}
};
struct Infeasible : Error {
  explicit Infeasible(const std::string& m) : Error("Infeasible: " + m) {}
};

enum class CaseTag { I, IIA, IIBi, IIBii, IIBiii };

std::string to_string(CaseTag tag);

// Canonical session-1 path P with the contact region both sessions must
// share: n1 = first P node reachable from s2, nk = last P node reaching t2.
// The path is rerouted until no node off the stem offers an earlier joint
// entry (A1) or a later joint exit (A2), so n1/nk are extremal.
struct StemDecomposition {
  Path p;                     // full s1->t1 path
  NodeId n1 = -1, nk = -1;    // entry and exit contact nodes on p
  Path prefix;                // p before n1
  Path stem;                  // p from n1 to nk (edge set: the shared stem)
  Path suffix;                // p after nk
  Path t1_branch;             // s2 -> n1
  Path t2_branch;             // nk -> t2
  std::vector<NodeId> interior;  // stem nodes strictly between n1 and nk
  int reroutes = 0;

  int stem_position(NodeId v) const;  // index along stem nodes, -1 if absent
};

// Requires: both sessions connected, no two edge-disjoint session paths.
StemDecomposition find_stem(const DoubleUnicastNet& net);

// Edges whose removal disconnects both sessions but neither cross pair.
// Such an edge lies on every session path, hence on the stem, so only stem
// edges are probed.
std::vector<EdgeId> edges_cutting_both(const DoubleUnicastNet& net,
                                       const StemDecomposition& stem);

// Label plan: edges grouped by the coefficient vector they carry. An edge
// listed under several distinct vectors carries their XOR; repeats of the
// same vector are no-ops.
struct CodePlan {
  std::vector<std::pair<Gf2Vec2, std::vector<EdgeId>>> groups;
  NetworkCode lower(EdgeId edge_count) const;
};

// Case IIA plan: x1 on prefix and a cross path s1->t2, x2 on the s2 branch
// and a cross path s2->t1, x1^x2 on stem, suffix and t2 branch. The cross
// paths avoid all nodes lying between n1 and nk (endpoints exempt).
CodePlan butterfly_plan(const DoubleUnicastNet& net,
                        const StemDecomposition& stem);

// Hop chain: v0 = n1; each handle q[i] leaves the previous window of the
// stem at u[i] and rejoins it further down at v[i] (or reaches a terminal),
// always avoiding stem edges. v[i] is the ancestrally last candidate; the
// window for u[i] is the stem strictly between v[i-2] and v[i-1].
struct HandleChain {
  bool mirrored = false;         // grown from s2 instead of s1
  std::vector<NodeId> v;         // v[0]=n1, ..., v[I] = terminal
  std::vector<NodeId> u;         // u[0]=-1; u[1] = chain source
  std::vector<Path> q;           // q[0] empty placeholder; q[i] = handle i
  NodeId terminal = -1;          // == v.back()

  int length() const { return static_cast<int>(v.size()) - 1; }
};

// which selects CaseTag::IIBi (from s1) or CaseTag::IIBii (from s2).
HandleChain handle_chain(const DoubleUnicastNet& net,
                         const StemDecomposition& stem, CaseTag which);

// Stem segment labels S[0..I-1], pinned at the terminal end (chain into t1
// leaves the last segment on x2, into t2 on x1) and rolled backwards
// through the three-label cycle; S[0] is corrected to a label the entry
// node can feed.
std::vector<Gf2Vec2> segment_labels(const DoubleUnicastNet& net,
                                    const HandleChain& chain);

// Full chain-case plan: prefix/branches as needed by S[0], labeled stem
// segments, labeled handles, terminal delivery via suffix and t2 branch.
CodePlan grail_plan(const DoubleUnicastNet& net, const StemDecomposition& stem,
                    const HandleChain& chain);

// One reduction step for the cuts-neither case: removes the first edge of
// the deeper source's stem-avoiding probe path that leaves its entry
// branch, returning the reduced net and the removed edge.
std::pair<DoubleUnicastNet, EdgeId> reduce_iib_iii(
    const DoubleUnicastNet& net, const StemDecomposition& stem);

struct SynthesisResult {
  NetworkCode code;
  CaseTag case_tag = CaseTag::I;
  std::optional<std::pair<Path, Path>> routing;    // case I
  std::optional<StemDecomposition> stem;            // final dispatch
  std::optional<HandleChain> chain;                 // chain cases
  std::vector<Gf2Vec2> labels;                      // chain cases
  std::vector<EdgeId> removed_edges;                // case IIB(iii)
  std::optional<DoubleUnicastNet> reduced;          // net of final dispatch
  bool used_fallback = false;
  std::string fallback_reason;
};

// End-to-end synthesis. Throws Infeasible when a blocking edge exists,
// PairDisconnected when a session is not connected. The returned code
// always passes verify().
SynthesisResult synthesize(const DoubleUnicastNet& net,
                           const OracleConfig& oracle_config = {});

}  // namespace dunet

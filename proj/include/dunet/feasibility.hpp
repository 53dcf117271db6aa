#pragma once
// Unit-rate feasibility of a double unicast session pair via single-edge
// cut analysis, plus the induced rate region and time-shared routing.

#include <cstdint>
#include <vector>

#include "dunet/graph.hpp"

namespace dunet {

struct PairDisconnected : Error {
  explicit PairDisconnected(const std::string& m)
      : Error("PairDisconnected: " + m) {}
};
struct RateOutsideRegion : Error {
  explicit RateOutsideRegion(const std::string& m)
      : Error("RateOutsideRegion: " + m) {}
};

struct PairConnectivity {
  bool c11 = false;  // s1 reaches t1
  bool c22 = false;  // s2 reaches t2
  bool c12 = false;  // s1 reaches t2
  bool c21 = false;  // s2 reaches t1
};

PairConnectivity pair_connectivity(const DoubleUnicastNet& net);

// Removal flags for one candidate edge. "Disconnects" means the pair is not
// connected in the graph after removal, regardless of its prior status.
struct BlockingEdgeReport {
  EdgeId edge = -1;
  bool disconnects_11 = false;
  bool disconnects_22 = false;
  bool disconnects_12 = false;
  bool disconnects_21 = false;
  bool blocking = false;  // disconnects_11 && disconnects_22 &&
                          // (disconnects_12 || disconnects_21)
};

// Reports on every candidate edge: the intersection of the canonical
// (s1,t1) and (s2,t2) paths. Any blocking edge must disconnect both
// sessions, so it lies on every (s1,t1) and every (s2,t2) path and in
// particular in this intersection. Requires both sessions connected.
std::vector<BlockingEdgeReport> blocking_edges(const DoubleUnicastNet& net);

// True iff no blocking edge exists. Requires both sessions connected.
bool feasible_11(const DoubleUnicastNet& net);

struct RateRegion {
  enum class Kind { Degenerate, SumRateOne, ContainsUnitPair };
  Kind kind = Kind::Degenerate;
  // Populated for Degenerate: the best unicast rate of each session alone
  // (0 or 1 depending on connectivity).
  int max_r1 = 0;
  int max_r2 = 0;
};

RateRegion capacity_region(const DoubleUnicastNet& net);

enum class SymmetricCapacity { Zero, Half, AtLeastOne };

SymmetricCapacity symmetric_capacity(const DoubleUnicastNet& net);

// Exact nonnegative rational, normalized, positive denominator.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;
  static Rational make(int64_t num, int64_t den);
};

bool operator==(const Rational& a, const Rational& b);

struct SlotAssignment {
  int session = 0;  // 1 or 2; 0 = idle slot
  Path route;       // carries that session's symbol for the slot
};

struct TimeShareSchedule {
  int64_t block_length = 0;  // slots per block; ri*block_length is integral
  std::vector<SlotAssignment> slots;
};

// Routing schedule delivering rates (r1, r2) with r1+r2 <= 1 by time
// sharing the canonical session paths. Requires both sessions connected.
TimeShareSchedule time_share_schedule(const DoubleUnicastNet& net, Rational r1,
                                      Rational r2);

}  // namespace dunet

#pragma once
// Scalar binary network codes: each edge carries a GF(2) combination of the
// two session symbols. Verification, symbol-level simulation, and block
// simulation over a time-share schedule.

#include <cstdint>
#include <utility>
#include <vector>

#include "dunet/feasibility.hpp"
#include "dunet/graph.hpp"

namespace dunet {

struct DomainMismatch : Error {
  explicit DomainMismatch(const std::string& m)
      : Error("DomainMismatch: " + m) {}
};
struct InvalidCode : Error {
  explicit InvalidCode(const std::string& m) : Error("InvalidCode: " + m) {}
};
struct BlockLengthMismatch : Error {
  explicit BlockLengthMismatch(const std::string& m)
      : Error("BlockLengthMismatch: " + m) {}
};

// Edge coefficient pair: the edge carries a*x1 XOR b*x2.
struct Gf2Vec2 {
  uint8_t a = 0;
  uint8_t b = 0;
};

inline bool operator==(Gf2Vec2 u, Gf2Vec2 v) { return u.a == v.a && u.b == v.b; }
inline bool operator!=(Gf2Vec2 u, Gf2Vec2 v) { return !(u == v); }
inline Gf2Vec2 operator^(Gf2Vec2 u, Gf2Vec2 v) {
  return Gf2Vec2{static_cast<uint8_t>(u.a ^ v.a),
                 static_cast<uint8_t>(u.b ^ v.b)};
}

constexpr Gf2Vec2 kZero{0, 0};
constexpr Gf2Vec2 kX1{1, 0};
constexpr Gf2Vec2 kX2{0, 1};
constexpr Gf2Vec2 kX1X2{1, 1};

// Total assignment EdgeId -> coefficients; unused edges carry (0,0).
struct NetworkCode {
  std::vector<Gf2Vec2> coeff;
};

bool operator==(const NetworkCode& a, const NetworkCode& b);

struct VerifyReport {
  std::vector<char> edge_ok;  // edge value lies in the span at its tail
  bool t1_decodes = false;    // x1 recoverable at t1
  bool t2_decodes = false;    // x2 recoverable at t2
  bool valid = false;
};

// Local computability at every tail plus decodability at both terminals.
// s1 injects x1 and s2 injects x2 (both symbols at a coincident node);
// code size must equal the edge count.
VerifyReport verify(const DoubleUnicastNet& net, const NetworkCode& code);

struct SimulationResult {
  std::vector<uint8_t> edge_value;  // by EdgeId
  uint8_t t1_output = 0;            // decoded x1
  uint8_t t2_output = 0;            // decoded x2
};

// Evaluates every edge and decodes both terminals for one input pair.
// The code must verify; otherwise InvalidCode.
SimulationResult simulate(const DoubleUnicastNet& net, const NetworkCode& code,
                          uint8_t x1, uint8_t x2);

// Slot-wise routed transmission of symbol blocks. Block lengths must equal
// the per-session slot counts of the schedule. Returns the blocks received
// at t1 and t2.
std::pair<std::vector<uint8_t>, std::vector<uint8_t>> simulate_schedule(
    const DoubleUnicastNet& net, const TimeShareSchedule& schedule,
    const std::vector<uint8_t>& x1_block, const std::vector<uint8_t>& x2_block);

}  // namespace dunet

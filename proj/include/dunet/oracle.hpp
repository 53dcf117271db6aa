#pragma once
// Exhaustive search for scalar binary codes, used as ground truth. The
// search assigns edges in topological order, each restricted to the span of
// its tail's available vectors, so the explored space collapses far below
// the naive 4^edges bound on typical instances.

#include <cstdint>
#include <optional>

#include "dunet/codec.hpp"
#include "dunet/graph.hpp"

namespace dunet {

struct OracleTooLarge : Error {
  explicit OracleTooLarge(const std::string& m)
      : Error("OracleTooLarge: " + m) {}
};

struct OracleConfig {
  // Cap on explored partial assignments; exceeding it mid-search raises
  // OracleTooLarge. Absence of a code is only reported on a complete search.
  uint64_t max_search_space = uint64_t(1) << 24;
  // Kept for interface stability; the search is always canonical
  // (lex-first code under the fixed edge and vector order).
  bool determinize = true;
};

// First valid code in canonical order, or nullopt when none exists.
// Edge order: (topological index of tail, EdgeId); vector order:
// (0,0) < (0,1) < (1,0) < (1,1).
std::optional<NetworkCode> exhaustive_scalar_codes(
    const DoubleUnicastNet& net, const OracleConfig& config = {});

struct AgreementRecord {
  bool feasible = false;      // single-edge cut analysis verdict
  bool oracle_found = false;  // exhaustive search found a code
  bool agree = false;
};

// Cross-checks the cut-based verdict against the exhaustive search.
AgreementRecord agreement_check(const DoubleUnicastNet& net,
                                const OracleConfig& config = {});

}  // namespace dunet

#include "dunet/codec.hpp"

#include <algorithm>

namespace dunet {

bool operator==(const NetworkCode& a, const NetworkCode& b) {
  if (a.coeff.size() != b.coeff.size()) return false;
  for (size_t i = 0; i < a.coeff.size(); ++i)
    if (a.coeff[i] != b.coeff[i]) return false;
  return true;
}

namespace {

uint8_t span_mask(const std::vector<Gf2Vec2>& vecs) {
  // Bit v.a*2+v.b marks membership of that vector in the span.
  uint8_t span = 1;  // (0,0)
  for (Gf2Vec2 v : vecs) {
    uint8_t add = 0;
    for (int c = 0; c < 4; ++c)
      if (span >> c & 1) add |= uint8_t(1 << (c ^ (v.a * 2 + v.b)));
    span |= add;
  }
  return span;
}

bool in_span(Gf2Vec2 target, const std::vector<Gf2Vec2>& vecs) {
  return (span_mask(vecs) >> (target.a * 2 + target.b) & 1) != 0;
}

// Available coefficient vectors at a node: source injections first, then
// in-edges in EdgeId order. The fixed order makes decoding canonical.
std::vector<Gf2Vec2> avail(const DoubleUnicastNet& net, const NetworkCode& code,
                           NodeId v) {
  std::vector<Gf2Vec2> vecs;
  if (v == net.s1) vecs.push_back(kX1);
  if (v == net.s2) vecs.push_back(kX2);
  for (EdgeId e : net.dag.in_edges(v)) vecs.push_back(code.coeff[e]);
  return vecs;
}

// Lexicographically first selection over vecs combining to target;
// empty result if target is outside the span.
std::optional<std::vector<char>> decode_selection(
    Gf2Vec2 target, const std::vector<Gf2Vec2>& vecs) {
  if (!in_span(target, vecs)) return std::nullopt;
  std::vector<char> pick(vecs.size(), 0);
  for (size_t i = 0; i < vecs.size(); ++i) {
    std::vector<Gf2Vec2> rest(vecs.begin() + i + 1, vecs.end());
    if (in_span(target, rest)) continue;  // can leave vecs[i] out
    pick[i] = 1;
    target = target ^ vecs[i];
  }
  return pick;
}

}  // namespace

VerifyReport verify(const DoubleUnicastNet& net, const NetworkCode& code) {
  if (static_cast<EdgeId>(code.coeff.size()) != net.dag.edge_count())
    throw DomainMismatch("code size differs from edge count");
  VerifyReport rep;
  rep.edge_ok.assign(code.coeff.size(), 1);
  bool all_ok = true;
  for (EdgeId e = 0; e < net.dag.edge_count(); ++e) {
    if (code.coeff[e] == kZero) continue;
    if (!net.dag.alive(e) ||
        !in_span(code.coeff[e], avail(net, code, net.dag.edge(e).tail))) {
      rep.edge_ok[e] = 0;
      all_ok = false;
    }
  }
  rep.t1_decodes = in_span(kX1, avail(net, code, net.t1));
  rep.t2_decodes = in_span(kX2, avail(net, code, net.t2));
  rep.valid = all_ok && rep.t1_decodes && rep.t2_decodes;
  return rep;
}

SimulationResult simulate(const DoubleUnicastNet& net, const NetworkCode& code,
                          uint8_t x1, uint8_t x2) {
  auto rep = verify(net, code);
  if (!rep.valid) throw InvalidCode("code fails verification");
  x1 &= 1;
  x2 &= 1;
  SimulationResult res;
  res.edge_value.assign(code.coeff.size(), 0);
  for (EdgeId e = 0; e < net.dag.edge_count(); ++e)
    res.edge_value[e] = uint8_t((code.coeff[e].a & x1) ^ (code.coeff[e].b & x2));
  auto decode = [&](NodeId v, Gf2Vec2 target) -> uint8_t {
    auto vecs = avail(net, code, v);
    auto pick = decode_selection(target, vecs);
    // Observed values mirror the avail layout: injections, then in-edges.
    std::vector<uint8_t> obs;
    if (v == net.s1) obs.push_back(x1);
    if (v == net.s2) obs.push_back(x2);
    for (EdgeId e : net.dag.in_edges(v)) obs.push_back(res.edge_value[e]);
    uint8_t y = 0;
    for (size_t i = 0; i < pick->size(); ++i)
      if ((*pick)[i]) y ^= obs[i];
    return y;
  };
  res.t1_output = decode(net.t1, kX1);
  res.t2_output = decode(net.t2, kX2);
  return res;
}

std::pair<std::vector<uint8_t>, std::vector<uint8_t>> simulate_schedule(
    const DoubleUnicastNet& net, const TimeShareSchedule& schedule,
    const std::vector<uint8_t>& x1_block,
    const std::vector<uint8_t>& x2_block) {
  size_t need1 = 0, need2 = 0;
  for (const auto& slot : schedule.slots) {
    if (slot.session == 1) ++need1;
    if (slot.session == 2) ++need2;
  }
  if (x1_block.size() != need1 || x2_block.size() != need2)
    throw BlockLengthMismatch("block sizes must match per-session slot counts");
  std::vector<uint8_t> out1, out2;
  size_t i1 = 0, i2 = 0;
  for (const auto& slot : schedule.slots) {
    if (slot.session == 0) continue;
    NodeId want_start = slot.session == 1 ? net.s1 : net.s2;
    NodeId want_end = slot.session == 1 ? net.t1 : net.t2;
    if (slot.route.start != want_start || slot.route.end(net.dag) != want_end)
      throw std::invalid_argument("slot route does not join its session pair");
    if (slot.session == 1)
      out1.push_back(x1_block[i1++] & 1);
    else
      out2.push_back(x2_block[i2++] & 1);
  }
  return {out1, out2};
}

}  // namespace dunet

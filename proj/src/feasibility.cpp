#include "dunet/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dunet {

namespace {

bool connected(const Dag& d, NodeId a, NodeId b,
               const std::vector<EdgeId>& banned = {}) {
  return reachable_from(d, {a}, banned)[b] != 0;
}

}  // namespace

PairConnectivity pair_connectivity(const DoubleUnicastNet& net) {
  auto r1 = reachable_from(net.dag, {net.s1});
  auto r2 = reachable_from(net.dag, {net.s2});
  return PairConnectivity{r1[net.t1] != 0, r2[net.t2] != 0, r1[net.t2] != 0,
                          r2[net.t1] != 0};
}

std::vector<BlockingEdgeReport> blocking_edges(const DoubleUnicastNet& net) {
  auto p1 = find_path(net.dag, net.s1, net.t1);
  auto p2 = find_path(net.dag, net.s2, net.t2);
  if (!p1 || !p2)
    throw PairDisconnected("blocking_edges requires both sessions connected");
  std::set<EdgeId> on1(p1->edges.begin(), p1->edges.end());
  std::vector<EdgeId> candidates;
  for (EdgeId e : p2->edges)
    if (on1.count(e)) candidates.push_back(e);
  std::sort(candidates.begin(), candidates.end());
  std::vector<BlockingEdgeReport> out;
  for (EdgeId e : candidates) {
    BlockingEdgeReport r;
    r.edge = e;
    r.disconnects_11 = !connected(net.dag, net.s1, net.t1, {e});
    r.disconnects_22 = !connected(net.dag, net.s2, net.t2, {e});
    r.disconnects_12 = !connected(net.dag, net.s1, net.t2, {e});
    r.disconnects_21 = !connected(net.dag, net.s2, net.t1, {e});
    r.blocking = r.disconnects_11 && r.disconnects_22 &&
                 (r.disconnects_12 || r.disconnects_21);
    out.push_back(r);
  }
  return out;
}

bool feasible_11(const DoubleUnicastNet& net) {
  for (const auto& r : blocking_edges(net))
    if (r.blocking) return false;
  return true;
}

RateRegion capacity_region(const DoubleUnicastNet& net) {
  auto pc = pair_connectivity(net);
  RateRegion region;
  if (!pc.c11 || !pc.c22) {
    region.kind = RateRegion::Kind::Degenerate;
    region.max_r1 = pc.c11 ? 1 : 0;
    region.max_r2 = pc.c22 ? 1 : 0;
    return region;
  }
  region.kind = feasible_11(net) ? RateRegion::Kind::ContainsUnitPair
                                 : RateRegion::Kind::SumRateOne;
  return region;
}

SymmetricCapacity symmetric_capacity(const DoubleUnicastNet& net) {
  switch (capacity_region(net).kind) {
    case RateRegion::Kind::Degenerate:
      return SymmetricCapacity::Zero;
    case RateRegion::Kind::SumRateOne:
      return SymmetricCapacity::Half;
    case RateRegion::Kind::ContainsUnitPair:
      return SymmetricCapacity::AtLeastOne;
  }
  return SymmetricCapacity::Zero;
}

Rational Rational::make(int64_t num, int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw std::invalid_argument("negative rate");
  int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}

TimeShareSchedule time_share_schedule(const DoubleUnicastNet& net, Rational r1,
                                      Rational r2) {
  r1 = Rational::make(r1.num, r1.den);
  r2 = Rational::make(r2.num, r2.den);
  auto p1 = find_path(net.dag, net.s1, net.t1);
  auto p2 = find_path(net.dag, net.s2, net.t2);
  if (!p1 || !p2)
    throw PairDisconnected(
        "time_share_schedule requires both sessions connected");
  // r1 + r2 <= 1, checked exactly.
  if (r1.num * r2.den + r2.num * r1.den > r1.den * r2.den)
    throw RateOutsideRegion("r1 + r2 exceeds 1");
  int64_t n = r1.den / std::gcd(r1.den, r2.den) * r2.den;
  int64_t k1 = r1.num * (n / r1.den);
  int64_t k2 = r2.num * (n / r2.den);
  TimeShareSchedule sched;
  sched.block_length = n;
  for (int64_t i = 0; i < n; ++i) {
    SlotAssignment slot;
    if (i < k1) {
      slot.session = 1;
      slot.route = *p1;
    } else if (i < k1 + k2) {
      slot.session = 2;
      slot.route = *p2;
    }
    sched.slots.push_back(slot);
  }
  return sched;
}

}  // namespace dunet

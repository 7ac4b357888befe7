#include "cycleflow/dominance.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "cycleflow/errors.hpp"

namespace cycleflow {
namespace {

bool dominates_on(const EdgeFlowProfile& f, const EdgeFlowProfile& f_prime, const ArcPath& path) {
  for (int e : path.edges()) {
    if (f[static_cast<std::size_t>(e)] < f_prime[static_cast<std::size_t>(e)]) return false;
  }
  return true;
}

// v strictly inside the clockwise open arc (a, b)
bool strictly_within(int n, int a, int b, int v) {
  const int to_v = ((v - a) % n + n) % n;
  const int to_b = ((b - a) % n + n) % n;
  return to_v > 0 && to_v < to_b;
}

std::vector<int> distinct_terminals(const CycleInstance& instance) {
  std::vector<int> t;
  for (const Commodity& c : instance.commodities()) {
    t.push_back(c.source);
    t.push_back(c.target);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

void require_two_commodities(const CycleInstance& instance, const char* what) {
  if (instance.commodity_count() != 2) {
    throw DomainError(std::string(what) + " is defined for exactly two commodities, got " +
                      std::to_string(instance.commodity_count()));
  }
}

}  // namespace

const char* to_string(Configuration configuration) {
  switch (configuration) {
    case Configuration::SamePair: return "same-pair";
    case Configuration::SharedVertex: return "shared-vertex";
    case Configuration::NonCrossing: return "non-crossing";
    case Configuration::Crossing: return "crossing";
  }
  throw DomainError("unknown configuration value");
}

bool path_dominates(const CycleInstance& instance, const FlowAssignment& flow,
                    const FlowAssignment& flow_prime, const ArcPath& path) {
  if (path.cycle_size() != instance.vertex_count()) {
    throw DomainError("path and instance disagree on the cycle size");
  }
  return dominates_on(edge_flows(instance, flow), edge_flows(instance, flow_prime), path);
}

std::vector<DominanceWitness> witnesses_bruteforce(const CycleInstance& instance,
                                                   const FlowAssignment& flow,
                                                   const FlowAssignment& flow_prime) {
  const EdgeFlowProfile f = edge_flows(instance, flow);
  const EdgeFlowProfile f_prime = edge_flows(instance, flow_prime);
  std::vector<DominanceWitness> out;
  for (int i = 0; i < instance.commodity_count(); ++i) {
    const auto [cw, ccw] = paths_of(instance, i);
    if (flow.clockwise(i) > 0 && dominates_on(f, f_prime, cw)) {
      out.push_back({i, cw});
    }
    if (instance.commodity(i).demand - flow.clockwise(i) > 0 && dominates_on(f, f_prime, ccw)) {
      out.push_back({i, ccw});
    }
  }
  return out;
}

Configuration classify_configuration(const CycleInstance& instance) {
  require_two_commodities(instance, "configuration");
  const std::vector<int> terminals = distinct_terminals(instance);
  if (terminals.size() == 2) return Configuration::SamePair;
  if (terminals.size() == 3) return Configuration::SharedVertex;
  const Commodity& c1 = instance.commodity(0);
  const Commodity& c2 = instance.commodity(1);
  const int n = instance.vertex_count();
  const bool source_inside = strictly_within(n, c1.source, c1.target, c2.source);
  const bool target_inside = strictly_within(n, c1.source, c1.target, c2.target);
  return source_inside != target_inside ? Configuration::Crossing : Configuration::NonCrossing;
}

SegmentDecomposition segment_decomposition(const CycleInstance& instance) {
  const Configuration configuration = classify_configuration(instance);
  const std::vector<int> terminals = distinct_terminals(instance);
  SegmentDecomposition out{configuration, terminals.front(), {}};
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    out.segments.emplace_back(instance.vertex_count(), terminals[i],
                              terminals[(i + 1) % terminals.size()]);
  }
  return out;
}

SymmetryTransform::SymmetryTransform(int cycle_size, std::vector<int> commodity_order,
                                     std::vector<bool> swap_endpoints, bool reflect, int rotation)
    : n_(cycle_size),
      order_(std::move(commodity_order)),
      swap_(std::move(swap_endpoints)),
      reflect_(reflect),
      rotation_(rotation) {
  if (n_ < 3) {
    throw DomainError("transform on a cycle of size " + std::to_string(n_));
  }
  if (rotation_ < 0 || rotation_ >= n_) {
    throw DomainError("rotation out of range 0.." + std::to_string(n_ - 1));
  }
  if (order_.size() != swap_.size()) {
    throw DomainError("commodity order and endpoint swaps disagree in length");
  }
  std::vector<bool> seen(order_.size(), false);
  for (int i : order_) {
    if (i < 0 || i >= static_cast<int>(order_.size()) || seen[static_cast<std::size_t>(i)]) {
      throw DomainError("commodity order is not a permutation");
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
}

SymmetryTransform SymmetryTransform::identity(int cycle_size, int commodity_count) {
  std::vector<int> order(static_cast<std::size_t>(commodity_count));
  for (int i = 0; i < commodity_count; ++i) order[static_cast<std::size_t>(i)] = i;
  return SymmetryTransform(cycle_size, std::move(order),
                           std::vector<bool>(static_cast<std::size_t>(commodity_count), false),
                           false, 0);
}

int SymmetryTransform::map_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range");
  }
  const int value = reflect_ ? rotation_ - v : rotation_ + v;
  return ((value % n_) + n_) % n_;
}

int SymmetryTransform::map_edge(int e) const {
  if (e < 0 || e >= n_) {
    throw DomainError("edge " + std::to_string(e) + " out of range");
  }
  // edge e joins vertices e and e+1; its image joins the mapped pair, whose
  // smaller clockwise endpoint is rotation - e - 1 when reflecting
  const int value = reflect_ ? rotation_ - e - 1 : rotation_ + e;
  return ((value % n_) + n_) % n_;
}

ArcPath SymmetryTransform::map_path(const ArcPath& path) const {
  if (path.cycle_size() != n_) {
    throw DomainError("path and transform disagree on the cycle size");
  }
  // reflection reverses orientation, so the clockwise arc s->t maps to the
  // clockwise arc image(t)->image(s); the edge sets correspond either way
  if (!reflect_) return ArcPath(n_, map_vertex(path.start()), map_vertex(path.end()));
  return ArcPath(n_, map_vertex(path.end()), map_vertex(path.start()));
}

CycleInstance SymmetryTransform::apply(const CycleInstance& instance) const {
  if (instance.vertex_count() != n_ ||
      instance.commodity_count() != static_cast<int>(order_.size())) {
    throw DomainError("transform and instance disagree in shape");
  }
  std::vector<Commodity> commodities;
  commodities.reserve(order_.size());
  for (int original : order_) {
    const Commodity& c = instance.commodity(original);
    int s = c.source;
    int t = c.target;
    if (swap_[static_cast<std::size_t>(original)]) std::swap(s, t);
    commodities.push_back({map_vertex(s), map_vertex(t), c.demand});
  }
  return CycleInstance(n_, std::move(commodities));
}

FlowAssignment SymmetryTransform::apply(const CycleInstance& instance,
                                        const FlowAssignment& flow) const {
  if (flow.size() != static_cast<int>(order_.size())) {
    throw DomainError("transform and flow disagree in shape");
  }
  std::vector<Rational> x;
  x.reserve(order_.size());
  for (int original : order_) {
    // endpoint swap and reflection each exchange the commodity's two paths,
    // so the clockwise amount flips exactly when one of them acts
    const bool flip = swap_[static_cast<std::size_t>(original)] != reflect_;
    const Rational& amount = flow.clockwise(original);
    x.push_back(flip ? instance.commodity(original).demand - amount : amount);
  }
  return FlowAssignment(apply(instance), std::move(x));
}

SymmetryTransform SymmetryTransform::inverse() const {
  const std::size_t k = order_.size();
  std::vector<int> position(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    position[static_cast<std::size_t>(order_[j])] = static_cast<int>(j);
  }
  std::vector<bool> swap_back(k, false);
  for (std::size_t m = 0; m < k; ++m) {
    swap_back[m] = swap_[static_cast<std::size_t>(order_[m])];
  }
  const int rotation = reflect_ ? rotation_ : (n_ - rotation_) % n_;
  return SymmetryTransform(n_, std::move(position), std::move(swap_back), reflect_, rotation);
}

namespace {

struct CanonicalCandidate {
  std::array<int, 3> encoding;
  std::vector<int> order;
  std::vector<bool> swap;
  bool reflect = false;
  int rotation = 0;
};

}  // namespace

CanonicalProblem canonicalize(const CycleInstance& instance, const FlowAssignment& flow,
                              const FlowAssignment& flow_prime) {
  require_two_commodities(instance, "canonical form");
  const Configuration target = classify_configuration(instance);
  const int n = instance.vertex_count();

  // All 16 transforms whose rotation puts the slot-0 source on vertex 0;
  // keep those matching the configuration's reference terminal order and
  // among them the lexicographically smallest (t1', s2', t2'). Ties go to
  // the earliest candidate, so the identity-like transform wins when the
  // input is already canonical.
  std::optional<CanonicalCandidate> best;
  for (int swap_slots = 0; swap_slots < 2; ++swap_slots) {
    const std::vector<int> order =
        swap_slots ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
    for (int w0 = 0; w0 < 2; ++w0) {
      for (int w1 = 0; w1 < 2; ++w1) {
        const std::vector<bool> swap{w0 == 1, w1 == 1};
        const auto oriented = [&](int slot) {
          const Commodity& c = instance.commodity(order[static_cast<std::size_t>(slot)]);
          const bool swapped = swap[static_cast<std::size_t>(order[static_cast<std::size_t>(slot)])];
          return swapped ? std::pair<int, int>{c.target, c.source}
                         : std::pair<int, int>{c.source, c.target};
        };
        const auto [s1, t1] = oriented(0);
        const auto [s2, t2] = oriented(1);
        for (int refl = 0; refl < 2; ++refl) {
          const int rotation = refl ? s1 : (n - s1) % n;
          const SymmetryTransform candidate(n, order, swap, refl == 1, rotation);
          const int b1 = candidate.map_vertex(t1);
          const int a2 = candidate.map_vertex(s2);
          const int b2 = candidate.map_vertex(t2);
          bool matches = false;
          switch (target) {
            case Configuration::SamePair:
              matches = a2 == 0 && b1 == b2;
              break;
            case Configuration::SharedVertex:
              matches = a2 == 0 && b1 != 0 && b2 != 0 && b1 < b2;
              break;
            case Configuration::NonCrossing:
              matches = 0 < b1 && b1 < a2 && a2 < b2;
              break;
            case Configuration::Crossing:
              matches = 0 < a2 && a2 < b1 && b1 < b2;
              break;
          }
          if (!matches) continue;
          const std::array<int, 3> encoding{b1, a2, b2};
          if (!best || encoding < best->encoding) {
            best = CanonicalCandidate{encoding, order, swap, refl == 1, rotation};
          }
        }
      }
    }
  }
  if (!best) {
    throw std::logic_error("canonicalization found no matching transform");
  }
  SymmetryTransform transform(n, best->order, best->swap, best->reflect, best->rotation);
  CycleInstance mapped = transform.apply(instance);
  FlowAssignment mapped_flow = transform.apply(instance, flow);
  FlowAssignment mapped_prime = transform.apply(instance, flow_prime);
  return CanonicalProblem{std::move(mapped), std::move(mapped_flow), std::move(mapped_prime),
                          std::move(transform), target};
}

namespace {

// Single commodity: compare the clockwise amounts and take the clockwise
// path when it holds at least as much and is used at all, else the other.
DominanceWitness single_commodity_witness(const CycleInstance& instance,
                                          const FlowAssignment& flow,
                                          const FlowAssignment& flow_prime) {
  const auto [forward, backward] = paths_of(instance, 0);
  const Rational& a = flow.clockwise(0);
  const Rational& a_prime = flow_prime.clockwise(0);
  if (a >= a_prime && a > 0) return {0, forward};
  // a < a' makes the backward amount strictly larger than its counterpart;
  // a = a' = 0 puts the whole demand backward under both flows
  return {0, backward};
}

// Both commodities share {source, target}, so each edge carries one of the
// two joint totals. Compare totals on the anchor-side path, then name the
// lowest slot that actually uses the chosen direction.
DominanceWitness same_pair_witness(const CanonicalProblem& canon) {
  const auto [forward, backward] = paths_of(canon.instance, 0);
  const Rational total = canon.flow.clockwise(0) + canon.flow.clockwise(1);
  const Rational total_prime = canon.flow_prime.clockwise(0) + canon.flow_prime.clockwise(1);
  const ArcPath& chosen = (total >= total_prime && total > 0) ? forward : backward;
  for (int slot : {0, 1}) {
    if (path_flow(canon.instance, canon.flow, slot, chosen) > 0) return {slot, chosen};
  }
  throw std::logic_error("no slot uses the chosen direction");
}

// Shared layout of the shared-vertex and non-crossing cases: each commodity
// owns one private arc (path_a, path_b) and the rest of the cycle is covered
// by both complements together. Amounts fa, fb live on the private arcs.
struct DirectArcs {
  int slot_a;
  ArcPath path_a;
  Rational fa;
  Rational fa_prime;
  int slot_b;
  ArcPath path_b;
  Rational fb;
  Rational fb_prime;
};

// Case order mirrors the private-arc structure: private arcs first, then
// the complement whose positivity the preceding comparisons force. The
// first applicable rule wins.
DominanceWitness two_direct_arcs_witness(const CycleInstance& instance, const DirectArcs& d) {
  // f - f' equals +delta on path_a's edges, -delta on path_b's edges, and
  // -(fa - fa') - (fb - fb') on the remaining edges
  const Rational delta = (d.fa - d.fa_prime) - (d.fb - d.fb_prime);
  if (d.fa > 0) {
    if (delta >= 0) return {d.slot_a, d.path_a};
    if (d.fb > 0) return {d.slot_b, d.path_b};
    // delta < 0 with fb = 0 forces fa < fa' <= demand_a, so the complement
    // of path_a is used and every edge of it gains strictly
    if (instance.commodity(d.slot_a).demand - d.fa > 0) {
      return {d.slot_a, d.path_a.complement()};
    }
    throw std::logic_error("private arc a saturated under a strict loss");
  }
  if (d.fb > 0) {
    if (delta <= 0) return {d.slot_b, d.path_b};
    // delta > 0 with fa = 0 forces fb < fb' <= demand_b
    if (instance.commodity(d.slot_b).demand - d.fb > 0) {
      return {d.slot_b, d.path_b.complement()};
    }
    throw std::logic_error("private arc b saturated under a strict loss");
  }
  // both private arcs unused: both demands ride the complements
  return delta >= 0 ? DominanceWitness{d.slot_b, d.path_b.complement()}
                    : DominanceWitness{d.slot_a, d.path_a.complement()};
}

DominanceWitness shared_vertex_witness(const CanonicalProblem& canon) {
  const CycleInstance& ci = canon.instance;
  const ArcPath cw1 = paths_of(ci, 0).first;
  const ArcPath ccw2 = paths_of(ci, 1).second;
  const Rational& r2 = ci.commodity(1).demand;
  // slot 0 owns cw(0, t1); slot 1 owns the counterclockwise arc cw(t2, 0)
  return two_direct_arcs_witness(
      ci, DirectArcs{0, cw1, canon.flow.clockwise(0), canon.flow_prime.clockwise(0),
                     1, ccw2, r2 - canon.flow.clockwise(1), r2 - canon.flow_prime.clockwise(1)});
}

DominanceWitness non_crossing_witness(const CanonicalProblem& canon) {
  const CycleInstance& ci = canon.instance;
  const ArcPath cw1 = paths_of(ci, 0).first;
  const ArcPath cw2 = paths_of(ci, 1).first;
  // the clockwise arcs cw(0, t1) and cw(s2, t2) are disjoint and private
  return two_direct_arcs_witness(
      ci, DirectArcs{0, cw1, canon.flow.clockwise(0), canon.flow_prime.clockwise(0),
                     1, cw2, canon.flow.clockwise(1), canon.flow_prime.clockwise(1)});
}

// Interleaved terminals. The two clockwise paths overlap on cw(s2, t1), and
// with u = A - A', v = B - B' the edge gains are u - v, u + v, v - u, -u - v
// on the four segments clockwise from vertex 0.
DominanceWitness crossing_witness(const CanonicalProblem& canon) {
  const CycleInstance& ci = canon.instance;
  const auto [path_a, path_a_back] = paths_of(ci, 0);
  const auto [path_b, path_b_back] = paths_of(ci, 1);
  const Rational& r1 = ci.commodity(0).demand;
  const Rational& r2 = ci.commodity(1).demand;
  Rational a = canon.flow.clockwise(0);
  Rational b = canon.flow.clockwise(1);
  Rational a_prime = canon.flow_prime.clockwise(0);
  Rational b_prime = canon.flow_prime.clockwise(1);

  // The case split below needs a > 0. Reversing both commodities (x -> r-x
  // in all four amounts) permutes the segment values by a half turn, and a
  // witness of the reversed problem maps back by complementing its path.
  const bool reversed = a == 0;
  if (reversed) {
    a = r1 - a;
    a_prime = r1 - a_prime;
    b = r2 - b;
    b_prime = r2 - b_prime;
  }

  const Rational skew = (a - b) - (a_prime - b_prime);
  const Rational bulk = (a + b) - (a_prime + b_prime);
  DominanceWitness witness = [&]() -> DominanceWitness {
    if (skew >= 0 && bulk >= 0) return {0, path_a};
    if (skew < 0) {
      if (b > 0 && bulk >= 0) return {1, path_b};
      // skew < 0 with bulk < 0 (or b = 0) forces a < a', so the reverse of
      // path_a is used and gains on both of its segments
      if (r1 - a > 0) return {0, path_a_back};
      throw std::logic_error("path a saturated under a strict loss");
    }
    // skew >= 0 and bulk < 0 force b < b'
    if (r2 - b > 0) return {1, path_b_back};
    throw std::logic_error("path b saturated under a strict loss");
  }();
  if (reversed) witness.path = witness.path.complement();
  return witness;
}

}  // namespace

DominanceWitness witness_constructive(const CycleInstance& instance, const FlowAssignment& flow,
                                      const FlowAssignment& flow_prime) {
  if (flow.size() != instance.commodity_count() || flow_prime.size() != instance.commodity_count()) {
    throw DomainError("flows and instance disagree on the number of commodities");
  }
  const int k = instance.commodity_count();
  if (k > 2) {
    throw UnsupportedError(
        "no dominating path is guaranteed for three or more commodities; "
        "a three-commodity counterexample exists");
  }

  DominanceWitness witness = [&]() {
    if (k == 1) return single_commodity_witness(instance, flow, flow_prime);
    const CanonicalProblem canon = canonicalize(instance, flow, flow_prime);
    DominanceWitness canonical = [&]() {
      switch (canon.configuration) {
        case Configuration::SamePair: return same_pair_witness(canon);
        case Configuration::SharedVertex: return shared_vertex_witness(canon);
        case Configuration::NonCrossing: return non_crossing_witness(canon);
        case Configuration::Crossing: return crossing_witness(canon);
      }
      throw DomainError("unknown configuration value");
    }();
    return DominanceWitness{canon.transform.commodity_order()[static_cast<std::size_t>(
                                canonical.commodity)],
                            canon.transform.inverse().map_path(canonical.path)};
  }();

  if (path_flow(instance, flow, witness.commodity, witness.path) <= 0 ||
      !path_dominates(instance, flow, flow_prime, witness.path)) {
    throw std::logic_error("constructed witness failed validation");
  }
  return witness;
}

}  // namespace cycleflow

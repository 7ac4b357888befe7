#pragma once

#include <vector>

#include "cycleflow/model.hpp"

namespace cycleflow {

// Witness that f is not edge-wise beaten by f' along some used path: the
// commodity sends a positive amount over `path` and every edge of `path`
// carries at least as much under f as under f'.
struct DominanceWitness {
  int commodity;
  ArcPath path;

  friend bool operator==(const DominanceWitness&, const DominanceWitness&) = default;
};

// Relative position of the terminals of a two-commodity instance.
//   SamePair:     both commodities share {source, target}
//   SharedVertex: exactly one terminal vertex is shared
//   NonCrossing:  four distinct terminals, pairs do not interleave
//   Crossing:     four distinct terminals, pairs interleave
enum class Configuration { SamePair, SharedVertex, NonCrossing, Crossing };

const char* to_string(Configuration configuration);

// Maximal arcs between consecutive distinct terminal vertices, clockwise
// from vertex `anchor` (the canonical slot-0 source). SamePair yields 2
// segments, SharedVertex 3, NonCrossing and Crossing 4.
struct SegmentDecomposition {
  Configuration configuration;
  int anchor;
  std::vector<ArcPath> segments;
};

// Cycle relabelling (rotation, optional reflection) combined with a
// commodity reordering and per-commodity endpoint swaps. Vertex v maps to
// rotation +/- v mod n. Reflection reverses orientation, so it exchanges the
// two paths of a commodity, as does an endpoint swap; the mapped clockwise
// amount is x_i when the two cancel and demand_i - x_i otherwise.
class SymmetryTransform {
 public:
  SymmetryTransform(int cycle_size, std::vector<int> commodity_order,
                    std::vector<bool> swap_endpoints, bool reflect, int rotation);

  static SymmetryTransform identity(int cycle_size, int commodity_count);

  int cycle_size() const { return n_; }
  // order[j] = index of the original commodity placed at slot j
  const std::vector<int>& commodity_order() const { return order_; }
  // indexed by original commodity
  const std::vector<bool>& swap_endpoints() const { return swap_; }
  bool reflect() const { return reflect_; }
  int rotation() const { return rotation_; }

  int map_vertex(int v) const;
  int map_edge(int e) const;
  ArcPath map_path(const ArcPath& path) const;
  CycleInstance apply(const CycleInstance& instance) const;
  FlowAssignment apply(const CycleInstance& instance, const FlowAssignment& flow) const;
  SymmetryTransform inverse() const;

 private:
  int n_;
  std::vector<int> order_;
  std::vector<bool> swap_;
  bool reflect_;
  int rotation_;
};

// Two-commodity problem rewritten so slot-0's source sits at vertex 0 and
// the terminals follow the configuration's reference order. `transform`
// maps the original problem onto `instance`.
struct CanonicalProblem {
  CycleInstance instance;
  FlowAssignment flow;
  FlowAssignment flow_prime;
  SymmetryTransform transform;
  Configuration configuration;
};

// True when every edge of `path` carries at least as much under f as f'.
bool path_dominates(const CycleInstance& instance, const FlowAssignment& flow,
                    const FlowAssignment& flow_prime, const ArcPath& path);

// All witnesses, commodities in index order, clockwise path before
// counterclockwise. Any number of commodities.
std::vector<DominanceWitness> witnesses_bruteforce(const CycleInstance& instance,
                                                   const FlowAssignment& flow,
                                                   const FlowAssignment& flow_prime);

// Requires exactly two commodities.
Configuration classify_configuration(const CycleInstance& instance);
SegmentDecomposition segment_decomposition(const CycleInstance& instance);
CanonicalProblem canonicalize(const CycleInstance& instance, const FlowAssignment& flow,
                              const FlowAssignment& flow_prime);

// Dominance witness built by case analysis instead of search. Defined for
// one and two commodities; throws UnsupportedError for three or more. The
// result is always validated against the witness definition before return.
DominanceWitness witness_constructive(const CycleInstance& instance, const FlowAssignment& flow,
                                      const FlowAssignment& flow_prime);

}  // namespace cycleflow

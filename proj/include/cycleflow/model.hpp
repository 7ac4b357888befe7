#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycleflow/rational.hpp"

namespace cycleflow {

// One origin/terminal pair with its demand. Endpoints are distinct vertex
// labels on the cycle; the demand is strictly positive.
struct Commodity {
  int source = 0;
  int target = 0;
  Rational demand;

  friend bool operator==(const Commodity&, const Commodity&) = default;
};

// Undirected cycle with n >= 3 vertices labelled 0..n-1. Edge j joins
// vertices j and (j+1) mod n, so edges and vertices share labels.
// Immutable after construction.
class CycleInstance {
 public:
  CycleInstance(int vertex_count, std::vector<Commodity> commodities);

  int vertex_count() const { return n_; }
  int edge_count() const { return n_; }
  int commodity_count() const { return static_cast<int>(commodities_.size()); }
  const std::vector<Commodity>& commodities() const { return commodities_; }
  const Commodity& commodity(int i) const;

  friend bool operator==(const CycleInstance&, const CycleInstance&) = default;

 private:
  int n_;
  std::vector<Commodity> commodities_;
};

// Contiguous run of cycle edges traversed clockwise (increasing labels mod
// n): edges start, start+1, ..., end-1. Nonempty and shorter than the full
// cycle, so (start, end) with start != end determines it.
class ArcPath {
 public:
  ArcPath(int cycle_size, int start, int end);

  int cycle_size() const { return n_; }
  int start() const { return start_; }
  int end() const { return end_; }
  int length() const { return (end_ - start_ + n_) % n_; }
  bool contains_edge(int edge) const;
  std::vector<int> edges() const;
  ArcPath complement() const { return ArcPath(n_, end_, start_); }

  friend bool operator==(const ArcPath&, const ArcPath&) = default;

 private:
  int n_;
  int start_;
  int end_;
};

// Routing for every commodity: x_i rides the clockwise source->target arc
// and demand_i - x_i the complement, so a vector with 0 <= x_i <= demand_i
// is exactly a feasible flow.
class FlowAssignment {
 public:
  FlowAssignment(const CycleInstance& instance, std::vector<Rational> clockwise);

  const std::vector<Rational>& clockwise() const { return x_; }
  const Rational& clockwise(int i) const;
  int size() const { return static_cast<int>(x_.size()); }

  friend bool operator==(const FlowAssignment&, const FlowAssignment&) = default;

 private:
  std::vector<Rational> x_;
};

// Total flow per edge, indexed by edge label.
using EdgeFlowProfile = std::vector<Rational>;

// The clockwise source->target arc. Its complement is the other s-t path.
ArcPath clockwise_path(const CycleInstance& instance, int source, int target);

// (clockwise, counterclockwise) paths of commodity i.
std::pair<ArcPath, ArcPath> paths_of(const CycleInstance& instance, int commodity);

// Amount commodity i sends along `path`, which must be one of its two paths.
Rational path_flow(const CycleInstance& instance, const FlowAssignment& flow,
                   int commodity, const ArcPath& path);

// Sum over commodities of the amount each of their paths puts on each edge.
EdgeFlowProfile edge_flows(const CycleInstance& instance, const FlowAssignment& flow);

// Text formats. Instance files: comment lines start with '#', one
// "cycle <n>" line, then one "commodity <source> <target> <demand>" line per
// commodity. Flow files: a single "flow <x_1> ... <x_k>" line. Rationals are
// "p" or "p/q" in lowest terms.
CycleInstance parse_instance(std::string_view text);
FlowAssignment parse_flow(std::string_view text, const CycleInstance& instance);
std::string serialize_instance(const CycleInstance& instance);
std::string serialize_flow(const FlowAssignment& flow);

}  // namespace cycleflow

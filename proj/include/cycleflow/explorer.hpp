#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycleflow/model.hpp"

namespace cycleflow {

// One used path together with an edge refuting its dominance: the commodity
// sends a positive amount over `path` yet f(edge) < f'(edge).
struct ViolationEntry {
  int commodity;
  ArcPath path;
  int edge;
  Rational flow_on_edge;
  Rational flow_prime_on_edge;

  friend bool operator==(const ViolationEntry&, const ViolationEntry&) = default;
};

// Proof that no dominating path exists for a pair (f, f'): every path
// carrying positive flow under f appears once, commodities in index order
// and clockwise before counterclockwise, each with its smallest-labelled
// failing edge.
struct ViolationCertificate {
  std::vector<ViolationEntry> entries;

  friend bool operator==(const ViolationCertificate&, const ViolationCertificate&) = default;
};

// Three commodities on a 6-cycle whose flow pair admits no dominating path
// in either direction. Demands are 3; the pair is x = (2, 1, 2) against
// x' = (1, 2, 1), giving per-edge loads (5,4,5,4,5,4) and (4,5,4,5,4,5).
struct CounterexampleK3 {
  CycleInstance instance;
  FlowAssignment flow;
  FlowAssignment flow_prime;
};

CounterexampleK3 counterexample_k3();

// Certificate when (f, f') violates the dominance property, nullopt when a
// witness exists.
std::optional<ViolationCertificate> check_violation(const CycleInstance& instance,
                                                    const FlowAssignment& flow,
                                                    const FlowAssignment& flow_prime);

enum class SearchMode { Grid, Random };

struct SearchViolation {
  FlowAssignment flow;
  FlowAssignment flow_prime;
  ViolationCertificate certificate;
};

struct SearchReport {
  SearchMode mode = SearchMode::Grid;
  int cycle_size = 0;
  int commodity_count = 0;
  Rational grid_step;                // grid mode
  std::uint64_t trials = 0;          // random mode
  std::uint64_t seed = 0;            // random mode
  int denominator_bound = 0;         // random mode
  std::uint64_t examined = 0;        // ordered pairs checked
  std::vector<SearchViolation> violations;
};

inline constexpr int kDefaultDenominatorBound = 16;

// Every ordered pair of flows whose clockwise amounts walk each commodity's
// [0, demand] range in multiples of `step` (the demand itself is always
// included). Violations appear in row-major pair order.
SearchReport search_grid(const CycleInstance& instance, const Rational& step, int threads = 1);

// `trials` independently sampled pairs; trial t draws from a substream of
// `seed` determined only by (seed, t), so the report is identical for any
// thread count. Amounts are demand * j / denominator_bound with j uniform.
SearchReport search_random(const CycleInstance& instance, std::uint64_t trials,
                           std::uint64_t seed, int denominator_bound = kDefaultDenominatorBound,
                           int threads = 1);

// Line-oriented rendering: header lines (mode, params, examined, violations)
// followed by one block per violation holding the two flow lines and one
// "cert <commodity> <start> <end> <edge> <f> <f'>" line per certificate
// entry.
std::string serialize_report(const SearchReport& report);

}  // namespace cycleflow

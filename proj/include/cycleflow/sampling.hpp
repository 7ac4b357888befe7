#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cycleflow/dominance.hpp"
#include "cycleflow/explorer.hpp"
#include "cycleflow/model.hpp"
#include "cycleflow/prng.hpp"

namespace cycleflow {

// Positive rational with numerator and denominator drawn from 1..bound.
Rational random_demand(SplitMix64& rng, int bound);

// Single commodity on a cycle with 3 <= n <= max_n, uniformly placed
// distinct endpoints.
CycleInstance random_instance_k1(SplitMix64& rng, int max_n, int demand_bound);

// Two commodities realizing `target`, sampled in the reference terminal
// order and then pushed through a uniform random symmetry (rotation,
// reflection, endpoint swaps, commodity order), so callers see arbitrary
// labellings. NonCrossing and Crossing need max_n >= 4.
CycleInstance random_instance_k2(SplitMix64& rng, int max_n, Configuration target,
                                 int demand_bound);

// Amounts demand_i * j / denominator_bound with j uniform in
// 0..denominator_bound, independently per commodity.
FlowAssignment random_flow(SplitMix64& rng, const CycleInstance& instance,
                           int denominator_bound);

struct VerificationFailure {
  std::uint64_t trial;
  CycleInstance instance;
  FlowAssignment flow;
  FlowAssignment flow_prime;
  std::string reason;
};

// Randomized check that every sampled flow pair admits a dominating path:
// the exhaustive witness list must be nonempty, the violation checker must
// agree, and the constructed witness must appear in the exhaustive list.
// k is 1 or 2. Trial t depends only on (seed, t). Returns the first failure.
std::optional<VerificationFailure> verification_campaign(
    int k, std::uint64_t trials, std::uint64_t seed, int max_n,
    int denominator_bound = kDefaultDenominatorBound);

}  // namespace cycleflow

#include "cycleflow/sampling.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "cycleflow/errors.hpp"

namespace cycleflow {
namespace {

// `count` distinct values from 1..n-1 in ascending order, via a partial
// shuffle so the number of draws is fixed.
std::vector<int> distinct_inner_vertices(SplitMix64& rng, int n, int count) {
  std::vector<int> pool(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  for (int j = 0; j < count; ++j) {
    const std::uint64_t pick =
        rng.below(static_cast<std::uint64_t>(n - 1 - j)) + static_cast<std::uint64_t>(j);
    std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

int random_cycle_size(SplitMix64& rng, int min_n, int max_n) {
  return min_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - min_n + 1)));
}

}  // namespace

Rational random_demand(SplitMix64& rng, int bound) {
  if (bound < 1) {
    throw DomainError("demand bound must be at least 1");
  }
  const std::uint64_t numerator = rng.below(static_cast<std::uint64_t>(bound)) + 1;
  const std::uint64_t denominator = rng.below(static_cast<std::uint64_t>(bound)) + 1;
  return Rational(Integer(numerator), Integer(denominator));
}

CycleInstance random_instance_k1(SplitMix64& rng, int max_n, int demand_bound) {
  if (max_n < 3) {
    throw DomainError("max_n must be at least 3");
  }
  const int n = random_cycle_size(rng, 3, max_n);
  const int source = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  const int target =
      (source + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)))) % n;
  return CycleInstance(n, {{source, target, random_demand(rng, demand_bound)}});
}

CycleInstance random_instance_k2(SplitMix64& rng, int max_n, Configuration target,
                                 int demand_bound) {
  const bool four_terminals =
      target == Configuration::NonCrossing || target == Configuration::Crossing;
  const int min_n = four_terminals ? 4 : 3;
  if (max_n < min_n) {
    throw DomainError("max_n too small for the requested configuration");
  }
  const int n = random_cycle_size(rng, min_n, max_n);

  std::vector<Commodity> commodities;
  switch (target) {
    case Configuration::SamePair: {
      const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      commodities = {{0, t, random_demand(rng, demand_bound)},
                     {0, t, random_demand(rng, demand_bound)}};
      break;
    }
    case Configuration::SharedVertex: {
      const std::vector<int> v = distinct_inner_vertices(rng, n, 2);
      commodities = {{0, v[0], random_demand(rng, demand_bound)},
                     {0, v[1], random_demand(rng, demand_bound)}};
      break;
    }
    case Configuration::NonCrossing: {
      const std::vector<int> v = distinct_inner_vertices(rng, n, 3);
      commodities = {{0, v[0], random_demand(rng, demand_bound)},
                     {v[1], v[2], random_demand(rng, demand_bound)}};
      break;
    }
    case Configuration::Crossing: {
      const std::vector<int> v = distinct_inner_vertices(rng, n, 3);
      commodities = {{0, v[1], random_demand(rng, demand_bound)},
                     {v[0], v[2], random_demand(rng, demand_bound)}};
      break;
    }
  }
  const CycleInstance reference(n, std::move(commodities));

  const std::vector<int> order =
      rng.below(2) ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
  const std::vector<bool> swaps{rng.below(2) == 1, rng.below(2) == 1};
  const bool reflect = rng.below(2) == 1;
  const int rotation = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return SymmetryTransform(n, order, swaps, reflect, rotation).apply(reference);
}

FlowAssignment random_flow(SplitMix64& rng, const CycleInstance& instance,
                           int denominator_bound) {
  if (denominator_bound < 1) {
    throw DomainError("denominator bound must be at least 1");
  }
  std::vector<Rational> x(static_cast<std::size_t>(instance.commodity_count()));
  for (int i = 0; i < instance.commodity_count(); ++i) {
    const std::uint64_t j = rng.below(static_cast<std::uint64_t>(denominator_bound) + 1);
    x[static_cast<std::size_t>(i)] =
        instance.commodity(i).demand * Rational(Integer(j), Integer(denominator_bound));
  }
  return FlowAssignment(instance, std::move(x));
}

namespace {

Configuration campaign_configuration(std::uint64_t trial, int max_n) {
  // cycle through the configurations; on a 3-cycle only the 2- and
  // 3-terminal ones fit
  const int span = max_n >= 4 ? 4 : 2;
  switch (trial % static_cast<std::uint64_t>(span)) {
    case 0: return Configuration::SamePair;
    case 1: return Configuration::SharedVertex;
    case 2: return Configuration::NonCrossing;
    default: return Configuration::Crossing;
  }
}

}  // namespace

std::optional<VerificationFailure> verification_campaign(int k, std::uint64_t trials,
                                                         std::uint64_t seed, int max_n,
                                                         int denominator_bound) {
  if (k != 1 && k != 2) {
    throw DomainError("the dominance guarantee covers one or two commodities");
  }
  if (max_n < 3) {
    throw DomainError("max_n must be at least 3");
  }
  if (trials < 1) {
    throw DomainError("at least one trial is required");
  }

  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng(substream_seed(seed, t));
    const CycleInstance instance =
        k == 1 ? random_instance_k1(rng, max_n, denominator_bound)
               : random_instance_k2(rng, max_n, campaign_configuration(t, max_n),
                                    denominator_bound);
    const FlowAssignment f = random_flow(rng, instance, denominator_bound);
    const FlowAssignment g = random_flow(rng, instance, denominator_bound);

    const std::vector<DominanceWitness> witnesses = witnesses_bruteforce(instance, f, g);
    if (witnesses.empty()) {
      return VerificationFailure{t, instance, f, g, "no dominating path exists"};
    }
    if (check_violation(instance, f, g).has_value()) {
      return VerificationFailure{t, instance, f, g,
                                 "violation certificate produced despite a witness"};
    }
    try {
      const DominanceWitness witness = witness_constructive(instance, f, g);
      if (std::find(witnesses.begin(), witnesses.end(), witness) == witnesses.end()) {
        return VerificationFailure{t, instance, f, g,
                                   "constructed witness missing from the exhaustive list"};
      }
    } catch (const std::exception& error) {
      return VerificationFailure{t, instance, f, g,
                                 std::string("constructed witness failed: ") + error.what()};
    }
  }
  return std::nullopt;
}

}  // namespace cycleflow

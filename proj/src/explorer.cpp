#include "cycleflow/explorer.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iterator>
#include <thread>
#include <utility>

#include "cycleflow/errors.hpp"
#include "cycleflow/prng.hpp"

namespace cycleflow {
namespace {

// Largest grid side kept small enough that the pair count fits comfortably
// in 64 bits.
constexpr std::uint64_t kMaxGridCombinations = std::uint64_t{1} << 31;

std::optional<ViolationCertificate> violation_from_profiles(const CycleInstance& instance,
                                                            const FlowAssignment& flow,
                                                            const EdgeFlowProfile& f,
                                                            const EdgeFlowProfile& f_prime) {
  ViolationCertificate certificate;
  for (int i = 0; i < instance.commodity_count(); ++i) {
    const auto [cw, ccw] = paths_of(instance, i);
    const Rational& forward = flow.clockwise(i);
    const Rational backward = instance.commodity(i).demand - forward;
    const std::array<std::pair<const ArcPath*, const Rational*>, 2> used{
        {{&cw, &forward}, {&ccw, &backward}}};
    for (const auto& [path, amount] : used) {
      if (*amount <= 0) continue;
      int failing = -1;
      for (int e = 0; e < instance.edge_count(); ++e) {
        if (path->contains_edge(e) &&
            f[static_cast<std::size_t>(e)] < f_prime[static_cast<std::size_t>(e)]) {
          failing = e;
          break;
        }
      }
      // a used path with no failing edge dominates, so there is no violation
      if (failing < 0) return std::nullopt;
      certificate.entries.push_back({i, *path, failing, f[static_cast<std::size_t>(failing)],
                                     f_prime[static_cast<std::size_t>(failing)]});
    }
  }
  return certificate;
}

// Contiguous slice [begin, end) of 0..total for worker w of `workers`.
std::pair<std::uint64_t, std::uint64_t> slice(std::uint64_t total, int workers, int w) {
  const std::uint64_t u = static_cast<std::uint64_t>(w);
  const std::uint64_t d = static_cast<std::uint64_t>(workers);
  return {total * u / d, total * (u + 1) / d};
}

void run_workers(int workers, const std::function<void(int)>& body) {
  if (workers <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (std::thread& t : pool) t.join();
}

}  // namespace

CounterexampleK3 counterexample_k3() {
  CycleInstance instance(6, {{0, 3, Rational(3)}, {1, 4, Rational(3)}, {2, 5, Rational(3)}});
  FlowAssignment flow(instance, {Rational(2), Rational(1), Rational(2)});
  FlowAssignment flow_prime(instance, {Rational(1), Rational(2), Rational(1)});
  return {std::move(instance), std::move(flow), std::move(flow_prime)};
}

std::optional<ViolationCertificate> check_violation(const CycleInstance& instance,
                                                    const FlowAssignment& flow,
                                                    const FlowAssignment& flow_prime) {
  const EdgeFlowProfile f = edge_flows(instance, flow);
  const EdgeFlowProfile f_prime = edge_flows(instance, flow_prime);
  return violation_from_profiles(instance, flow, f, f_prime);
}

SearchReport search_grid(const CycleInstance& instance, const Rational& step, int threads) {
  if (step <= 0) {
    throw DomainError("grid step must be positive");
  }
  const int k = instance.commodity_count();

  // grid side per commodity: multiples of step in [0, demand) plus the
  // demand endpoint; counted arithmetically so oversized grids are rejected
  // before any list is built
  std::uint64_t combinations = 1;
  for (int i = 0; i < k; ++i) {
    const Rational ratio = instance.commodity(i).demand / step;
    const Integer whole = numerator(ratio) / denominator(ratio);
    const bool integral = numerator(ratio) % denominator(ratio) == 0;
    const Integer side = whole + (integral ? 1 : 2);
    if (side > Integer(kMaxGridCombinations) ||
        combinations > kMaxGridCombinations / static_cast<std::uint64_t>(side)) {
      throw DomainError("grid too large to enumerate");
    }
    combinations *= static_cast<std::uint64_t>(side);
  }

  // per-commodity ascending value lists matching the counts above
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const Rational& demand = instance.commodity(i).demand;
    for (Rational v = 0; v < demand; v += step) values[static_cast<std::size_t>(i)].push_back(v);
    values[static_cast<std::size_t>(i)].push_back(demand);
  }

  // mixed-radix decode, last commodity fastest, so index order is
  // lexicographic order of the flow vectors
  const auto decode = [&](std::uint64_t index) {
    std::vector<Rational> x(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      const auto& list = values[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(i)] = list[index % list.size()];
      index /= list.size();
    }
    return FlowAssignment(instance, std::move(x));
  };

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(std::max(threads, 1), combinations));
  std::vector<std::vector<SearchViolation>> found(static_cast<std::size_t>(workers));
  run_workers(workers, [&](int w) {
    const auto [begin, end] = slice(combinations, workers, w);
    for (std::uint64_t fi = begin; fi < end; ++fi) {
      const FlowAssignment f = decode(fi);
      const EdgeFlowProfile profile_f = edge_flows(instance, f);
      for (std::uint64_t gi = 0; gi < combinations; ++gi) {
        const FlowAssignment g = decode(gi);
        const EdgeFlowProfile profile_g = edge_flows(instance, g);
        if (auto cert = violation_from_profiles(instance, f, profile_f, profile_g)) {
          found[static_cast<std::size_t>(w)].push_back({f, g, std::move(*cert)});
        }
      }
    }
  });

  SearchReport report;
  report.mode = SearchMode::Grid;
  report.cycle_size = instance.vertex_count();
  report.commodity_count = k;
  report.grid_step = step;
  report.examined = combinations * combinations;
  // slices are ascending in the outer index, so concatenation keeps the
  // lexicographic pair order for any worker count
  for (auto& part : found) {
    std::move(part.begin(), part.end(), std::back_inserter(report.violations));
  }
  return report;
}

SearchReport search_random(const CycleInstance& instance, std::uint64_t trials,
                           std::uint64_t seed, int denominator_bound, int threads) {
  if (trials < 1) {
    throw DomainError("at least one trial is required");
  }
  if (denominator_bound < 1) {
    throw DomainError("denominator bound must be at least 1");
  }
  const int k = instance.commodity_count();
  const Integer bound(denominator_bound);

  const auto run_trial = [&](std::uint64_t t) -> std::optional<SearchViolation> {
    SplitMix64 rng(substream_seed(seed, t));
    const auto draw = [&]() {
      std::vector<Rational> x(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        const std::uint64_t numerator =
            rng.below(static_cast<std::uint64_t>(denominator_bound) + 1);
        x[static_cast<std::size_t>(i)] =
            instance.commodity(i).demand * Rational(Integer(numerator), bound);
      }
      return FlowAssignment(instance, std::move(x));
    };
    const FlowAssignment f = draw();
    const FlowAssignment g = draw();
    const EdgeFlowProfile profile_f = edge_flows(instance, f);
    const EdgeFlowProfile profile_g = edge_flows(instance, g);
    if (auto cert = violation_from_profiles(instance, f, profile_f, profile_g)) {
      return SearchViolation{f, g, std::move(*cert)};
    }
    return std::nullopt;
  };

  const int workers = static_cast<int>(std::min<std::uint64_t>(std::max(threads, 1), trials));
  std::vector<std::vector<SearchViolation>> found(static_cast<std::size_t>(workers));
  run_workers(workers, [&](int w) {
    const auto [begin, end] = slice(trials, workers, w);
    for (std::uint64_t t = begin; t < end; ++t) {
      if (auto violation = run_trial(t)) {
        found[static_cast<std::size_t>(w)].push_back(std::move(*violation));
      }
    }
  });

  SearchReport report;
  report.mode = SearchMode::Random;
  report.cycle_size = instance.vertex_count();
  report.commodity_count = k;
  report.trials = trials;
  report.seed = seed;
  report.denominator_bound = denominator_bound;
  report.examined = trials;
  for (auto& part : found) {
    std::move(part.begin(), part.end(), std::back_inserter(report.violations));
  }
  return report;
}

std::string serialize_report(const SearchReport& report) {
  std::string out;
  if (report.mode == SearchMode::Grid) {
    out += "mode grid\n";
    out += "params step=" + format_rational(report.grid_step) + "\n";
  } else {
    out += "mode random\n";
    out += "params trials=" + std::to_string(report.trials) +
           " seed=" + std::to_string(report.seed) +
           " denom=" + std::to_string(report.denominator_bound) + "\n";
  }
  out += "examined " + std::to_string(report.examined) + "\n";
  out += "violations " + std::to_string(report.violations.size()) + "\n";
  for (const SearchViolation& violation : report.violations) {
    out += serialize_flow(violation.flow);
    out += serialize_flow(violation.flow_prime);
    for (const ViolationEntry& entry : violation.certificate.entries) {
      out += "cert " + std::to_string(entry.commodity) + " " +
             std::to_string(entry.path.start()) + " " + std::to_string(entry.path.end()) + " " +
             std::to_string(entry.edge) + " " + format_rational(entry.flow_on_edge) + " " +
             format_rational(entry.flow_prime_on_edge) + "\n";
    }
  }
  return out;
}

}  // namespace cycleflow

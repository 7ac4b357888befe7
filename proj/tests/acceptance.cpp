// Acceptance gate: every release criterion in one binary, one PASS/FAIL
// line each, nonzero exit when anything fails. Time budgets are part of
// the criteria and are enforced.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cycleflow/cli.hpp"
#include "cycleflow/dominance.hpp"
#include "cycleflow/explorer.hpp"
#include "cycleflow/model.hpp"
#include "cycleflow/prng.hpp"
#include "cycleflow/sampling.hpp"

using namespace cycleflow;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int g_failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& error) {
    outcome = {false, std::string("exception: ") + error.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string note;
  if (budget_seconds > 0 && elapsed >= budget_seconds) {
    outcome.ok = false;
    std::ostringstream over;
    over << "exceeded " << budget_seconds << " s budget";
    note = outcome.detail.empty() ? over.str() : outcome.detail + "; " + over.str();
  } else {
    note = outcome.detail;
  }

  std::cout << (outcome.ok ? "PASS" : "FAIL") << " " << name << " ["
            << static_cast<long long>(elapsed * 1000.0) << " ms]";
  if (!outcome.ok && !note.empty()) std::cout << " -- " << note;
  std::cout << "\n";
  if (!outcome.ok) ++g_failures;
}

bool entry_verifies(const CycleInstance& instance, const FlowAssignment& flow,
                    const EdgeFlowProfile& f, const EdgeFlowProfile& g,
                    const ViolationEntry& entry) {
  if (!(path_flow(instance, flow, entry.commodity, entry.path) > 0)) return false;
  if (!entry.path.contains_edge(entry.edge)) return false;
  const auto e = static_cast<std::size_t>(entry.edge);
  if (!(f[e] < g[e])) return false;
  if (entry.flow_on_edge != f[e] || entry.flow_prime_on_edge != g[e]) return false;
  for (int earlier = 0; earlier < entry.edge; ++earlier) {
    if (entry.path.contains_edge(earlier) &&
        f[static_cast<std::size_t>(earlier)] < g[static_cast<std::size_t>(earlier)]) {
      return false;
    }
  }
  return true;
}

Outcome table_reproduction() {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"paper-k3"}, out, err);
  const std::string expected =
      "j       1 2 3 4 5 6\n"
      "f(e_j)  5 4 5 4 5 4\n"
      "f'(e_j) 4 5 4 5 4 5\n"
      "no dominating path in either direction\n";
  if (code != 0) return {false, "exit code " + std::to_string(code)};
  if (out.str() != expected) return {false, "table text differs"};
  return {true, {}};
}

Outcome counterexample_validity() {
  const CounterexampleK3 cex = counterexample_k3();
  for (const auto& [from, to] : {std::pair{&cex.flow, &cex.flow_prime},
                                 std::pair{&cex.flow_prime, &cex.flow}}) {
    if (!witnesses_bruteforce(cex.instance, *from, *to).empty()) {
      return {false, "a dominating path was reported"};
    }
    const auto certificate = check_violation(cex.instance, *from, *to);
    if (!certificate) return {false, "no violation certificate"};
    if (certificate->entries.size() != 6) {
      return {false, "expected six certified paths, got " +
                         std::to_string(certificate->entries.size())};
    }
    const EdgeFlowProfile f = edge_flows(cex.instance, *from);
    const EdgeFlowProfile g = edge_flows(cex.instance, *to);
    std::set<std::pair<int, int>> covered;
    for (const ViolationEntry& entry : certificate->entries) {
      if (!entry_verifies(cex.instance, *from, f, g, entry)) {
        return {false, "a certificate entry does not verify"};
      }
      covered.insert({entry.commodity, entry.path.start()});
    }
    if (covered.size() != 6) return {false, "certified paths are not distinct"};
  }
  return {true, {}};
}

Outcome campaign(int k) {
  const auto failure = verification_campaign(k, 100000, k == 1 ? 2026 : 2027, 12, 16);
  if (failure) {
    return {false, "trial " + std::to_string(failure->trial) + ": " + failure->reason};
  }
  return {true, {}};
}

Outcome small_grids() {
  struct Fixture {
    Configuration configuration;
    CycleInstance instance;
  };
  const std::vector<Fixture> fixtures = {
      {Configuration::SamePair, CycleInstance(4, {{0, 2, Rational(1)}, {0, 2, Rational(1)}})},
      {Configuration::SharedVertex,
       CycleInstance(4, {{0, 1, Rational(1)}, {0, 2, Rational(1)}})},
      {Configuration::NonCrossing,
       CycleInstance(4, {{0, 1, Rational(1)}, {2, 3, Rational(1)}})},
      {Configuration::Crossing, CycleInstance(4, {{0, 2, Rational(1)}, {1, 3, Rational(1)}})},
  };
  for (const Fixture& fixture : fixtures) {
    if (classify_configuration(fixture.instance) != fixture.configuration) {
      return {false, "fixture configuration mismatch"};
    }
    const SearchReport report = search_grid(fixture.instance, Rational(1, 8));
    if (report.examined != 81 * 81) {
      return {false, "expected 6561 pairs, examined " + std::to_string(report.examined)};
    }
    if (!report.violations.empty()) {
      return {false, std::to_string(report.violations.size()) + " violations on a grid"};
    }
  }
  return {true, {}};
}

Outcome falsification_grid() {
  const CounterexampleK3 cex = counterexample_k3();
  const SearchReport report = search_grid(cex.instance, Rational(1), 4);
  if (report.examined != 4096) {
    return {false, "expected 4096 pairs, examined " + std::to_string(report.examined)};
  }
  if (report.violations.empty()) return {false, "no violations found"};
  const bool has_pair = std::any_of(
      report.violations.begin(), report.violations.end(), [&](const SearchViolation& v) {
        return v.flow == cex.flow && v.flow_prime == cex.flow_prime;
      });
  if (!has_pair) return {false, "the published pair is missing"};
  for (const SearchViolation& violation : report.violations) {
    const auto recheck = check_violation(cex.instance, violation.flow, violation.flow_prime);
    if (!recheck || *recheck != violation.certificate) {
      return {false, "a reported violation does not re-verify"};
    }
  }
  return {true, {}};
}

Outcome determinism_and_round_trips() {
  const CounterexampleK3 cex = counterexample_k3();
  const std::string base = serialize_report(search_random(cex.instance, 10000, 77, 16, 1));
  if (serialize_report(search_random(cex.instance, 10000, 77, 16, 1)) != base) {
    return {false, "rerun produced a different report"};
  }
  for (int threads : {2, 4}) {
    if (serialize_report(search_random(cex.instance, 10000, 77, 16, threads)) != base) {
      return {false, std::to_string(threads) + " threads produced a different report"};
    }
  }

  SplitMix64 rng(2028);
  for (int i = 0; i < 10000; ++i) {
    const Integer num = Integer(static_cast<std::int64_t>(rng.next()));
    const Integer den = Integer(rng.below(1000000) + 1);
    const Rational value(num, den);
    if (parse_rational(format_rational(value)) != value) {
      return {false, "rational round-trip failed: " + format_rational(value)};
    }
  }

  for (int i = 0; i < 100; ++i) {
    const CycleInstance instance =
        i % 2 == 0 ? random_instance_k1(rng, 12, 16)
                   : random_instance_k2(rng, 12, Configuration(i % 4), 16);
    if (parse_instance(serialize_instance(instance)) != instance) {
      return {false, "instance round-trip failed"};
    }
    const FlowAssignment flow = random_flow(rng, instance, 16);
    if (parse_flow(serialize_flow(flow), instance) != flow) {
      return {false, "flow round-trip failed"};
    }
  }
  return {true, {}};
}

}  // namespace

int main() {
  criterion("three-commodity table via paper-k3", 1.0, table_reproduction);
  criterion("three-commodity pair certified unbeatable both ways", 1.0, counterexample_validity);
  criterion("single-commodity dominance, 100000 random trials", 30.0, [] { return campaign(1); });
  criterion("two-commodity dominance, 100000 random trials", 60.0, [] { return campaign(2); });
  criterion("eighth-step grids in all four two-commodity configurations", 60.0, small_grids);
  criterion("unit grid finds and re-verifies the three-commodity pair", 5.0, falsification_grid);
  criterion("seeded search determinism and serialization round-trips", 0.0,
            determinism_and_round_trips);

  std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(g_failures) + " failed")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
